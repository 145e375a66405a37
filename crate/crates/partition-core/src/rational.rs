use crate::error::CoreError;

/// Exact scalar used throughout: reduced fraction with positive denominator.
/// Arithmetic never rounds.
pub type Rat = num_rational::Rational64;

/// Shorthand for an integer-valued `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Parses `p` or `p/q` (the text grammar shared with the command line).
pub fn parse_rat(text: &str) -> Result<Rat, CoreError> {
    text.trim()
        .parse::<Rat>()
        .map_err(|_| CoreError::BadRational(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("7/2").unwrap(), Rat::new(7, 2));
        assert_eq!(parse_rat("-4/2").unwrap(), rat(-2));
        assert_eq!(rat(5).to_string(), "5");
        assert_eq!(Rat::new(7, 2).to_string(), "7/2");
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let half = Rat::new(1, 2);
        assert_eq!(half + half, rat(1));
        assert_eq!(Rat::new(2, 4), half);
    }
}
