//! Choice of the ground field on the command line.

use std::fmt;
use std::str::FromStr;

/// Primes with a compiled-in field type.
pub const SUPPORTED_PRIMES: [u64; 7] = [2, 3, 5, 7, 11, 13, 1009];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Q,
    P(u64),
}

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::P(1009)
    }
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldChoice::Q);
        }
        let digits = s.strip_prefix("p=").unwrap_or(s);
        let p: u64 = digits.parse().map_err(|_| format!("unknown field {s:?}; use q or p=<prime>"))?;
        if SUPPORTED_PRIMES.contains(&p) {
            Ok(FieldChoice::P(p))
        } else {
            Err(format!("prime {p} is not supported; choose one of {SUPPORTED_PRIMES:?}"))
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Q => f.write_str("q"),
            FieldChoice::P(p) => write!(f, "p={p}"),
        }
    }
}

/// Runs `$body` with the type alias `$F` bound to the chosen field.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {
        match $choice {
            $crate::field::FieldChoice::Q => {
                type $F = cotilt_core::field::Rational;
                $body
            }
            $crate::field::FieldChoice::P(2) => {
                type $F = cotilt_core::field::Fp<2>;
                $body
            }
            $crate::field::FieldChoice::P(3) => {
                type $F = cotilt_core::field::Fp<3>;
                $body
            }
            $crate::field::FieldChoice::P(5) => {
                type $F = cotilt_core::field::Fp<5>;
                $body
            }
            $crate::field::FieldChoice::P(7) => {
                type $F = cotilt_core::field::Fp<7>;
                $body
            }
            $crate::field::FieldChoice::P(11) => {
                type $F = cotilt_core::field::Fp<11>;
                $body
            }
            $crate::field::FieldChoice::P(13) => {
                type $F = cotilt_core::field::Fp<13>;
                $body
            }
            $crate::field::FieldChoice::P(1009) => {
                type $F = cotilt_core::field::Fp<1009>;
                $body
            }
            $crate::field::FieldChoice::P(p) => unreachable!("prime {p} rejected when parsing"),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use cotilt_core::Field;

    #[test]
    fn parsing() {
        assert_eq!("q".parse::<FieldChoice>(), Ok(FieldChoice::Q));
        assert_eq!("p=7".parse::<FieldChoice>(), Ok(FieldChoice::P(7)));
        assert_eq!("1009".parse::<FieldChoice>(), Ok(FieldChoice::P(1009)));
        assert!("p=17".parse::<FieldChoice>().is_err());
        assert!("r".parse::<FieldChoice>().is_err());
    }

    #[test]
    fn dispatch() {
        let name = with_field!(FieldChoice::P(5), K => K::name());
        assert_eq!(name, cotilt_core::field::Fp::<5>::name());
        assert_eq!(with_field!(FieldChoice::Q, K => K::characteristic()), 0);
    }
}
