use std::fmt;

use abel_core::ratpoly::{parse_poly, parse_rational};
use abel_core::{Error, Interval, Poly};

use crate::cli::IntervalArgs;

/// Invalid command-line input (exit status 2).
#[derive(Debug)]
pub struct InputError {
    pub flag: String,
    pub text: Option<String>,
    pub source: Error,
}

impl InputError {
    pub fn new(flag: &str, source: Error) -> Self {
        InputError {
            flag: flag.into(),
            text: None,
            source,
        }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid {}: {}", self.flag, self.source)?;
        if let (Some(text), Error::Parse { position, .. }) = (&self.text, &self.source) {
            write!(f, "\n  {text}\n  {}^", " ".repeat(*position))?;
        }
        Ok(())
    }
}

impl std::error::Error for InputError {}

fn annotate(flag: &str, text: &str, source: Error) -> InputError {
    InputError {
        flag: flag.into(),
        text: Some(text.into()),
        source,
    }
}

pub fn poly(flag: &str, text: &str) -> Result<Poly, InputError> {
    parse_poly(text).map_err(|e| annotate(flag, text, e))
}

pub fn interval(args: &IntervalArgs) -> Result<Interval, InputError> {
    let a = parse_rational(args.a.trim()).map_err(|e| annotate("--a", &args.a, e))?;
    let b = parse_rational(args.b.trim()).map_err(|e| annotate("--b", &args.b, e))?;
    Interval::new(a, b).map_err(|e| InputError::new("--a/--b", e))
}
