//! Reduced rational functions over the polynomial ring.

use super::gcd::{div_exact, gcd};
use super::poly::Poly;

/// Quotient of two polynomials in lowest terms.
///
/// Invariants: the denominator is nonzero, monic under graded lex, and
/// coprime to the numerator. A `RatFunc` with unit denominator never occurs
/// inside a canonical [`super::Coeff`]; it demotes to the plain polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduces `num/den` to lowest terms with a monic denominator.
    /// Panics when `den` is zero; callers check that first.
    pub(crate) fn reduced(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(den.nvars()),
            };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                div_exact(&num, &g).expect("gcd divides numerator"),
                div_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        // Normalize: monic denominator.
        let lead = den
            .leading()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = super::Rational::from_integer(1.into()) / lead;
        den = den.scale(&inv);
        num = num.scale(&inv);
        RatFunc { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
