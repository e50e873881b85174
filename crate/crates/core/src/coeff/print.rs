//! Canonical textual form of coefficients.
//!
//! Terms are printed in descending graded-lex order with explicit `*` and
//! `^`, so printing followed by parsing is the identity on canonical forms.

use std::fmt;

use num_traits::{One, Signed};

use super::poly::Poly;
use super::{Coeff, Rational};

pub struct CoeffDisplay<'a> {
    coeff: &'a Coeff,
    vars: &'a [String],
}

impl<'a> CoeffDisplay<'a> {
    pub(crate) fn new(coeff: &'a Coeff, vars: &'a [String]) -> Self {
        assert_eq!(coeff.nvars(), vars.len(), "variable name count mismatch");
        CoeffDisplay { coeff, vars }
    }
}

impl fmt::Display for CoeffDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coeff {
            Coeff::Poly(p) => write_poly(f, p, self.vars),
            Coeff::Ratio(r) => {
                write!(f, "(")?;
                write_poly(f, r.num(), self.vars)?;
                write!(f, ")/(")?;
                write_poly(f, r.den(), self.vars)?;
                write!(f, ")")
            }
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly, vars: &[String]) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (k, (mono, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let abs = c.abs();
        if mono.is_unit() {
            write_rational(f, &abs)?;
            continue;
        }
        let mut lead = true;
        if !abs.is_one() {
            write_rational(f, &abs)?;
            lead = false;
        }
        for (idx, name) in vars.iter().enumerate() {
            let e = mono.exponent(idx);
            if e == 0 {
                continue;
            }
            if !lead {
                write!(f, "*")?;
            }
            lead = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use crate::coeff::parse_scalar;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn round_trip(src: &str, names: &[&str]) -> String {
        let v = vars(names);
        parse_scalar(src, &v).unwrap().to_expr_string(&v)
    }

    #[test]
    fn print_follows_graded_lex() {
        assert_eq!(round_trip("y + x^2 + 1 + x*y", &["x", "y"]), "x^2 + x*y + y + 1");
    }

    #[test]
    fn zero_and_signs() {
        assert_eq!(round_trip("x - x", &["x"]), "0");
        assert_eq!(round_trip("0 - x - 1/2", &["x"]), "-x - 1/2");
    }

    #[test]
    fn rational_function_form() {
        assert_eq!(round_trip("x/(1+y)", &["x", "y"]), "(x)/(y + 1)");
    }

    #[test]
    fn parse_print_identity_is_stable() {
        let v = vars(&["x", "y"]);
        let printed = round_trip("(2*x - y)^3/4", &["x", "y"]);
        let again = parse_scalar(&printed, &v).unwrap().to_expr_string(&v);
        assert_eq!(printed, again);
    }
}
