//! Exact coefficient arithmetic: rationals, multivariate polynomials and
//! reduced rational functions, with formal partial derivatives, a small
//! expression grammar and canonical printing.
//!
//! [`Coeff`] is the working scalar of the whole crate. Values stay in the
//! polynomial ring as long as possible and only promote to rational
//! functions when a division forces them to; every operation returns the
//! canonical form, so equality and the zero test are syntactic.

pub(crate) mod gcd;
pub(crate) mod parse;
mod poly;
mod print;
mod ratfunc;

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::Error;

pub use parse::parse_scalar;
pub use poly::{Monomial, Poly};
pub use print::CoeffDisplay;
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational number (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Element of the coefficient ring: a polynomial, or a reduced rational
/// function when division has left the polynomial ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coeff {
    Poly(Poly),
    Ratio(RatFunc),
}

impl Coeff {
    pub fn zero(nvars: usize) -> Coeff {
        Coeff::Poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Coeff {
        Coeff::Poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: Rational) -> Coeff {
        Coeff::Poly(Poly::constant(nvars, c))
    }

    pub fn int(nvars: usize, n: i64) -> Coeff {
        Coeff::constant(nvars, Rational::from_integer(n.into()))
    }

    pub fn var(nvars: usize, idx: usize) -> Coeff {
        Coeff::Poly(Poly::var(nvars, idx))
    }

    pub fn nvars(&self) -> usize {
        match self {
            Coeff::Poly(p) => p.nvars(),
            Coeff::Ratio(r) => r.nvars(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Poly(p) => p.is_zero(),
            Coeff::Ratio(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Poly(p) if p.is_one())
    }

    /// The value of a constant, `None` if any variable occurs.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Coeff::Poly(p) => p.as_rational(),
            Coeff::Ratio(_) => None,
        }
    }

    /// Numerator/denominator view; the denominator is 1 for polynomials.
    pub fn as_fraction(&self) -> (Poly, Poly) {
        match self {
            Coeff::Poly(p) => (p.clone(), Poly::one(p.nvars())),
            Coeff::Ratio(r) => (r.num().clone(), r.den().clone()),
        }
    }

    /// Canonical form from a fraction: reduce, normalize, demote when the
    /// denominator is a unit.
    fn from_fraction(num: Poly, den: Poly) -> Result<Coeff, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = den.as_rational() {
            // Constant denominator: stay polynomial.
            let inv = Rational::one() / c;
            return Ok(Coeff::Poly(num.scale(&inv)));
        }
        let r = RatFunc::reduced(num, den);
        if r.den().is_one() {
            Ok(Coeff::Poly(r.num().clone()))
        } else {
            Ok(Coeff::Ratio(r))
        }
    }

    pub fn checked_div(&self, rhs: &Coeff) -> Result<Coeff, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (an, ad) = self.as_fraction();
        let (bn, bd) = rhs.as_fraction();
        Coeff::from_fraction(&an * &bd, &ad * &bn)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Coeff, Error> {
        Coeff::one(self.nvars()).checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Coeff {
        let mut acc = Coeff::one(self.nvars());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to coordinate `idx`; the
    /// quotient rule is applied exactly for rational functions.
    pub fn partial(&self, idx: usize) -> Coeff {
        match self {
            Coeff::Poly(p) => Coeff::Poly(p.partial(idx)),
            Coeff::Ratio(r) => {
                let (n, d) = (r.num(), r.den());
                let num = &(&n.partial(idx) * d) - &(n * &d.partial(idx));
                let den = d * d;
                Coeff::from_fraction(num, den).expect("square of nonzero denominator")
            }
        }
    }

    /// Renders the element in the canonical textual form, given coordinate
    /// names.
    pub fn display<'a>(&'a self, vars: &'a [String]) -> CoeffDisplay<'a> {
        CoeffDisplay::new(self, vars)
    }

    pub fn to_expr_string(&self, vars: &[String]) -> String {
        self.display(vars).to_string()
    }

    fn binop(&self, rhs: &Coeff, f: impl Fn(&Poly, &Poly) -> Poly) -> Coeff {
        assert_eq!(self.nvars(), rhs.nvars(), "mixed variable sets");
        match (self, rhs) {
            (Coeff::Poly(a), Coeff::Poly(b)) => Coeff::Poly(f(a, b)),
            _ => {
                let (an, ad) = self.as_fraction();
                let (bn, bd) = rhs.as_fraction();
                // (an/ad) op (bn/bd) with op distributing over the common
                // denominator: works for + and - ; * is special-cased below.
                let num = f(&(&an * &bd), &(&bn * &ad));
                Coeff::from_fraction(num, &ad * &bd).expect("nonzero denominators")
            }
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        self.binop(rhs, |a, b| a + b)
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self.binop(rhs, |a, b| a - b)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        assert_eq!(self.nvars(), rhs.nvars(), "mixed variable sets");
        match (self, rhs) {
            (Coeff::Poly(a), Coeff::Poly(b)) => Coeff::Poly(a * b),
            _ => {
                let (an, ad) = self.as_fraction();
                let (bn, bd) = rhs.as_fraction();
                Coeff::from_fraction(&an * &bn, &ad * &bd).expect("nonzero denominators")
            }
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Poly(p) => Coeff::Poly(-p),
            Coeff::Ratio(r) => Coeff::Ratio(RatFunc::reduced(-r.num(), r.den().clone())),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Coeff {
            type Output = Coeff;
            fn $method(self, rhs: Coeff) -> Coeff {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Coeff> for Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &Coeff) -> Coeff {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl From<Poly> for Coeff {
    fn from(p: Poly) -> Coeff {
        Coeff::Poly(p)
    }
}
