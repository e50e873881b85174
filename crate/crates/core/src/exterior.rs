//! Sparse exterior algebra of multivectors and forms over the coefficient
//! ring.
//!
//! Basis monomials are strictly increasing index tuples, stored as bitmasks
//! (bit `i-1` set means index `i` is present), so a term map never holds a
//! non-canonical product. Multivectors live in the algebra spanned by the
//! frame `X_1..X_n`, forms in the one spanned by the dual frame
//! `α^1..α^n`; the two share one implementation and differ only in the
//! phantom kind parameter.

use std::collections::BTreeMap;
use std::marker::PhantomData;

use crate::coeff::parse::{ExprDomain, ExprParser};
use crate::coeff::{Coeff, Rational};
use crate::error::Error;

/// Marker for elements of the algebra of multivectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiKind;

/// Marker for elements of the algebra of forms (dual frame).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormKind;

/// Sparse graded element; see the module docs.
#[derive(Debug)]
pub struct Exterior<K> {
    n: usize,
    nvars: usize,
    terms: BTreeMap<u64, Coeff>,
    _kind: PhantomData<K>,
}

// Manual impls: the kind marker never needs to satisfy any bounds.
impl<K> Clone for Exterior<K> {
    fn clone(&self) -> Self {
        Exterior {
            n: self.n,
            nvars: self.nvars,
            terms: self.terms.clone(),
            _kind: PhantomData,
        }
    }
}

impl<K> PartialEq for Exterior<K> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<K> Eq for Exterior<K> {}

pub type Multivector = Exterior<MultiKind>;
pub type Form = Exterior<FormKind>;

/// Sign of the graded product moving the indices of `b` past those of `a`.
fn wedge_sign(a: u64, b: u64) -> i32 {
    let mut parity = 0u32;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        parity ^= (a >> (i + 1)).count_ones() & 1;
        rest &= rest - 1;
    }
    if parity == 0 {
        1
    } else {
        -1
    }
}

/// All degree-`k` index masks in lexicographic order of the index tuples.
pub fn masks_of_degree(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 64);
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | (1 << i)));
        // advance to the next combination in tuple-lex order
        let mut i = k;
        let mut moved = false;
        while i > 0 {
            i -= 1;
            if idx[i] < i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                moved = true;
                break;
            }
        }
        if !moved {
            return out;
        }
    }
}

impl<K> Exterior<K> {
    pub fn zero(n: usize, nvars: usize) -> Self {
        assert!(n <= 64, "fiber rank limited to 64");
        Exterior {
            n,
            nvars,
            terms: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    pub fn scalar(n: usize, nvars: usize, c: Coeff) -> Self {
        let mut e = Self::zero(n, nvars);
        e.add_term(0, c);
        e
    }

    pub fn one(n: usize, nvars: usize) -> Self {
        Self::scalar(n, nvars, Coeff::one(nvars))
    }

    /// Basis monomial from 1-based indices; panics unless they are strictly
    /// increasing and within range.
    pub fn basis(n: usize, nvars: usize, indices: &[usize]) -> Self {
        let mut mask = 0u64;
        let mut prev = 0;
        for &i in indices {
            assert!(i >= 1 && i <= n, "basis index out of range");
            assert!(i > prev, "basis indices must be strictly increasing");
            prev = i;
            mask |= 1 << (i - 1);
        }
        let mut e = Self::zero(n, nvars);
        e.add_term(mask, Coeff::one(nvars));
        e
    }

    pub fn from_terms(
        n: usize,
        nvars: usize,
        it: impl IntoIterator<Item = (u64, Coeff)>,
    ) -> Self {
        let mut e = Self::zero(n, nvars);
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Coeff)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Coefficient of a basis mask (zero when absent).
    pub fn coeff_of(&self, mask: u64) -> Coeff {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| Coeff::zero(self.nvars))
    }

    /// The degree-0 coefficient.
    pub fn scalar_part(&self) -> Coeff {
        self.coeff_of(0)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|&m| m == 0)
    }

    /// Degree of a homogeneous element; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for &m in self.terms.keys() {
            let d = m.count_ones() as usize;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// The degree-`k` part.
    pub fn component(&self, k: usize) -> Self {
        Self::from_terms(
            self.n,
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == k)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Homogeneous components with their degrees, lowest first.
    pub fn components(&self) -> Vec<(usize, Self)> {
        let degrees: std::collections::BTreeSet<usize> = self
            .terms
            .keys()
            .map(|m| m.count_ones() as usize)
            .collect();
        degrees.into_iter().map(|k| (k, self.component(k))).collect()
    }

    pub(crate) fn add_term(&mut self, mask: u64, c: Coeff) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.n == 64 || mask < (1u64 << self.n));
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.n, other.n, "elements of different fiber rank");
        assert_eq!(self.nvars, other.nvars, "elements over different charts");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(
            self.n,
            self.nvars,
            self.terms.iter().map(|(m, c)| (*m, -c)),
        )
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(
            self.n,
            self.nvars,
            self.terms.iter().map(|(m, a)| (*m, a * c)),
        )
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Coeff::constant(self.nvars, r.clone()))
    }

    /// Graded-commutative product.
    pub fn wedge(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = Self::zero(self.n, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let sign = wedge_sign(*ma, *mb);
                let mut c = ca * cb;
                if sign < 0 {
                    c = -&c;
                }
                out.add_term(ma | mb, c);
            }
        }
        out
    }

    /// Insertion of the `idx`-th (1-based) generator of the opposite
    /// algebra: on forms this contracts by the frame section `X_idx`, on
    /// multivectors by the coframe element `α^idx`. The sign counts the
    /// indices preceding `idx` in the tuple.
    pub fn contract_basis(&self, idx: usize) -> Self {
        assert!(idx >= 1 && idx <= self.n);
        let bit = 1u64 << (idx - 1);
        let below = bit - 1;
        let mut out = Self::zero(self.n, self.nvars);
        for (m, c) in &self.terms {
            if m & bit == 0 {
                continue;
            }
            let c = if (m & below).count_ones() % 2 == 0 {
                c.clone()
            } else {
                -c
            };
            out.add_term(m & !bit, c);
        }
        out
    }

    /// Renders the element canonically; `basis_names` are the frame (or
    /// coframe) names, `vars` the coordinate names.
    pub fn to_expr_string(&self, vars: &[String], basis_names: &[String]) -> String {
        assert_eq!(basis_names.len(), self.n);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut masks: Vec<u64> = self.terms.keys().copied().collect();
        masks.sort_by_key(|&m| (m.count_ones(), mask_to_tuple(m)));
        let mut out = String::new();
        for (k, mask) in masks.iter().enumerate() {
            let c = &self.terms[mask];
            let piece = term_string(c, *mask, vars, basis_names);
            if k == 0 {
                out.push_str(&piece);
            } else if let Some(body) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(body);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

fn mask_to_tuple(mask: u64) -> Vec<usize> {
    let mut v = Vec::new();
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        v.push(i + 1);
        m &= m - 1;
    }
    v
}

fn term_string(c: &Coeff, mask: u64, vars: &[String], basis_names: &[String]) -> String {
    let basis = mask_to_tuple(mask)
        .into_iter()
        .map(|i| basis_names[i - 1].clone())
        .collect::<Vec<_>>()
        .join(r"/\");
    if mask == 0 {
        return c.to_expr_string(vars);
    }
    if c.is_one() {
        return basis;
    }
    if (-c).is_one() {
        return format!("-{basis}");
    }
    let cs = c.to_expr_string(vars);
    // a single polynomial monomial multiplies on unambiguously; anything
    // else is parenthesized
    let simple = match c {
        Coeff::Poly(p) => p.num_terms() == 1,
        Coeff::Ratio(_) => false,
    };
    if simple {
        format!("{cs}*{basis}")
    } else {
        format!("({cs})*{basis}")
    }
}

/// Duality pairing `⟨ω, a⟩` with `⟨α^I, X_J⟩ = δ_IJ`; mixed degrees
/// contribute nothing.
pub fn pair(form: &Form, mv: &Multivector) -> Coeff {
    assert_eq!(form.n, mv.n, "elements of different fiber rank");
    assert_eq!(form.nvars, mv.nvars, "elements over different charts");
    let mut acc = Coeff::zero(form.nvars);
    for (m, c) in &form.terms {
        if let Some(d) = mv.terms.get(m) {
            acc = &acc + &(c * d);
        }
    }
    acc
}

/// Contraction `i_a ω` of a form by a multivector, with the composition
/// convention `i_{a∧b} = i_a ∘ i_b` and sections inserting into the first
/// argument slot.
pub fn contract_form(a: &Multivector, form: &Form) -> Form {
    assert_eq!(a.n, form.n, "elements of different fiber rank");
    assert_eq!(a.nvars, form.nvars, "elements over different charts");
    let mut out = Form::zero(form.n, form.nvars);
    for (mask, c) in &a.terms {
        // i_{X_{k1}} ∘ ... ∘ i_{X_{kr}}: innermost contraction first
        let mut acc = form.clone();
        for idx in mask_to_tuple(*mask).into_iter().rev() {
            acc = acc.contract_basis(idx);
            if acc.is_zero() {
                break;
            }
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// Contraction `i_φ a` of a multivector by a 1-form: the graded derivation
/// of degree −1 with `i_φ X = ⟨φ, X⟩` on sections.
pub fn contract_multi(phi: &Form, a: &Multivector) -> Multivector {
    assert_eq!(phi.n, a.n, "elements of different fiber rank");
    assert_eq!(phi.nvars, a.nvars, "elements over different charts");
    assert!(
        phi.is_zero() || phi.degree() == Some(1),
        "contraction needs a 1-form"
    );
    let mut out = Multivector::zero(a.n, a.nvars);
    for (mask, c) in &a.terms {
        for idx in mask_to_tuple(*mask) {
            let bit = 1u64 << (idx - 1);
            let phi_i = phi.coeff_of(bit);
            if phi_i.is_zero() {
                continue;
            }
            let mut t = c * &phi_i;
            if (mask & (bit - 1)).count_ones() % 2 == 1 {
                t = -&t;
            }
            out.add_term(mask & !bit, t);
        }
    }
    out
}

/// Nowhere-vanishing top form up to sign: `μ = √D · s · α^1∧…∧α^n` with
/// `s ≠ 0` and an optional metric factor `D ≠ 0`. Consumers only ever use
/// logarithmic derivatives of `√D`, which keeps all arithmetic rational.
#[derive(Clone, Debug)]
pub struct OddVolume {
    n: usize,
    nvars: usize,
    coeff: Coeff,
    half_det: Option<Coeff>,
}

impl OddVolume {
    pub fn new(n: usize, nvars: usize, coeff: Coeff) -> Result<Self, Error> {
        if coeff.is_zero() {
            return Err(Error::NonInvertibleVolume);
        }
        Ok(OddVolume {
            n,
            nvars,
            coeff,
            half_det: None,
        })
    }

    /// The coordinate volume `α^1∧…∧α^n`.
    pub fn coordinate(n: usize, nvars: usize) -> Self {
        OddVolume {
            n,
            nvars,
            coeff: Coeff::one(nvars),
            half_det: None,
        }
    }

    pub fn with_half_det(n: usize, nvars: usize, coeff: Coeff, det: Coeff) -> Result<Self, Error> {
        if coeff.is_zero() || det.is_zero() {
            return Err(Error::NonInvertibleVolume);
        }
        Ok(OddVolume {
            n,
            nvars,
            coeff,
            half_det: Some(det),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self) -> &Coeff {
        &self.coeff
    }

    pub fn half_det(&self) -> Option<&Coeff> {
        self.half_det.as_ref()
    }

    /// The opposite representative; every consumer is invariant under this.
    pub fn flip(&self) -> Self {
        OddVolume {
            n: self.n,
            nvars: self.nvars,
            coeff: -&self.coeff,
            half_det: self.half_det.clone(),
        }
    }

    pub fn scaled(&self, f: &Coeff) -> Result<Self, Error> {
        if f.is_zero() {
            return Err(Error::NonInvertibleVolume);
        }
        Ok(OddVolume {
            n: self.n,
            nvars: self.nvars,
            coeff: &self.coeff * f,
            half_det: self.half_det.clone(),
        })
    }

    /// Representatives agree up to an overall sign.
    pub fn same_up_to_sign(&self, other: &Self) -> bool {
        self.n == other.n
            && self.half_det == other.half_det
            && (self.coeff == other.coeff || self.coeff == -&other.coeff)
    }

    fn top_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// The representative as a form. Volumes carrying a metric factor have
    /// no representative in the coefficient ring and are refused; their
    /// consumers work through logarithmic derivatives instead.
    pub fn representative(&self) -> Result<Form, Error> {
        if self.half_det.is_some() {
            return Err(Error::NonInvertibleVolume);
        }
        Ok(Form::from_terms(
            self.n,
            self.nvars,
            [(self.top_mask(), self.coeff.clone())],
        ))
    }

    /// `a ↦ i_a μ`, an isomorphism in each degree.
    pub fn star(&self, a: &Multivector) -> Result<Form, Error> {
        let rep = self.representative()?;
        Ok(contract_form(a, &rep))
    }

    /// Inverse of [`OddVolume::star`]; promotes to rational functions when
    /// `1/s` requires it.
    pub fn star_inv(&self, form: &Form) -> Result<Multivector, Error> {
        if self.half_det.is_some() {
            return Err(Error::NonInvertibleVolume);
        }
        assert_eq!(form.n, self.n);
        let top = self.top_mask();
        let mut out = Multivector::zero(self.n, self.nvars);
        for (mask, c) in &form.terms {
            let k = top & !mask;
            // the star of X_K hits exactly α^mask, with a fixed sign
            let mut probe = Form::from_terms(self.n, self.nvars, [(top, Coeff::one(self.nvars))]);
            for idx in mask_to_tuple(k).into_iter().rev() {
                probe = probe.contract_basis(idx);
            }
            let sign = probe.coeff_of(*mask);
            debug_assert!(sign.is_one() || (-&sign).is_one());
            let denom = &sign * &self.coeff;
            out.add_term(
                k,
                c.checked_div(&denom)
                    .map_err(|_| Error::NonInvertibleVolume)?,
            );
        }
        Ok(out)
    }
}

/// Parse domain for graded expressions: coordinates are scalars, basis
/// names are generators, `*` and `/\` both wedge.
struct GradedDomain<'a, K> {
    vars: &'a [String],
    basis: &'a [String],
    _kind: PhantomData<K>,
}

impl<K> ExprDomain for GradedDomain<'_, K> {
    type Value = Exterior<K>;

    fn constant(&self, r: Rational) -> Self::Value {
        Exterior::scalar(
            self.basis.len(),
            self.vars.len(),
            Coeff::constant(self.vars.len(), r),
        )
    }

    fn ident(&self, name: &str, pos: usize) -> Result<Self::Value, Error> {
        if let Some(idx) = self.vars.iter().position(|v| v == name) {
            return Ok(Exterior::scalar(
                self.basis.len(),
                self.vars.len(),
                Coeff::var(self.vars.len(), idx),
            ));
        }
        if let Some(idx) = self.basis.iter().position(|v| v == name) {
            return Ok(Exterior::basis(
                self.basis.len(),
                self.vars.len(),
                &[idx + 1],
            ));
        }
        Err(Error::UnknownVariable {
            name: name.to_string(),
            pos,
        })
    }

    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value {
        a.add(&b)
    }

    fn sub(&self, a: Self::Value, b: Self::Value) -> Self::Value {
        a.sub(&b)
    }

    fn neg(&self, a: Self::Value) -> Self::Value {
        a.neg()
    }

    fn mul(&self, a: Self::Value, b: Self::Value, _pos: usize) -> Result<Self::Value, Error> {
        Ok(a.wedge(&b))
    }

    fn wedge(&self, a: Self::Value, b: Self::Value, _pos: usize) -> Result<Self::Value, Error> {
        Ok(a.wedge(&b))
    }

    fn div(&self, a: Self::Value, b: Self::Value, pos: usize) -> Result<Self::Value, Error> {
        if !b.is_scalar() {
            return Err(Error::syntax(pos, "division by a non-scalar"));
        }
        let inv = b.scalar_part().inverse()?;
        Ok(a.scale(&inv))
    }

    fn pow(&self, a: Self::Value, e: u32, pos: usize) -> Result<Self::Value, Error> {
        if !a.is_scalar() {
            return Err(Error::syntax(pos, "power of a non-scalar"));
        }
        Ok(Exterior::scalar(
            self.basis.len(),
            self.vars.len(),
            a.scalar_part().pow(e),
        ))
    }
}

/// Parses a multivector expression over coordinate and frame names.
pub fn parse_multivector(
    src: &str,
    vars: &[String],
    frame: &[String],
) -> Result<Multivector, Error> {
    ExprParser::parse(
        src,
        &GradedDomain::<MultiKind> {
            vars,
            basis: frame,
            _kind: PhantomData,
        },
    )
}

/// Parses a form expression over coordinate and coframe names.
pub fn parse_form(src: &str, vars: &[String], coframe: &[String]) -> Result<Form, Error> {
    ExprParser::parse(
        src,
        &GradedDomain::<FormKind> {
            vars,
            basis: coframe,
            _kind: PhantomData,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn form(src: &str, n: usize) -> Form {
        parse_form(src, &xy(), &names("a", n)).unwrap()
    }

    fn mv(src: &str, n: usize) -> Multivector {
        parse_multivector(src, &xy(), &names("e", n)).unwrap()
    }

    #[test]
    fn wedge_of_dual_basis() {
        let a1 = form("a1", 2);
        let a2 = form("a2", 2);
        assert_eq!(a1.wedge(&a2), form(r"a1/\a2", 2));
        assert!(a1.wedge(&a1).is_zero());
        assert_eq!(a2.wedge(&a1), form(r"a1/\a2", 2).neg());
    }

    #[test]
    fn wedge_bilinear_expansion() {
        // (x e1) ∧ (y e2 + e1) = xy e1∧e2
        let a = mv("x*e1", 2);
        let b = mv("y*e2 + e1", 2);
        assert_eq!(a.wedge(&b), mv(r"x*y*e1/\e2", 2));
    }

    #[test]
    fn pairing_is_kronecker_on_bases() {
        assert!(pair(&form(r"a1/\a2", 2), &mv(r"e1/\e2", 2)).is_one());
        assert!(pair(&form("a1", 2), &mv("e2", 2)).is_zero());
        assert_eq!(
            pair(&form(r"x*a1/\a2", 2), &mv(r"y*e1/\e2", 2)),
            crate::coeff::parse_scalar("x*y", &xy()).unwrap()
        );
    }

    #[test]
    fn contraction_of_forms() {
        // i_{X_1} α^{12} = α^2, i_{X_2} α^1 = 0
        assert_eq!(
            contract_form(&mv("e1", 2), &form(r"a1/\a2", 2)),
            form("a2", 2)
        );
        assert!(contract_form(&mv("e2", 2), &form("a1", 2)).is_zero());
        // i_{X_1∧X_2} α^{12} = -1 under the composition convention
        assert_eq!(
            contract_form(&mv(r"e1/\e2", 2), &form(r"a1/\a2", 2)),
            form("-1", 2)
        );
    }

    #[test]
    fn contraction_is_a_derivation_in_the_form() {
        // i_X(ω∧η) = i_Xω ∧ η + (-1)^{|ω|} ω ∧ i_Xη for a section X
        let x = mv("e2", 3);
        let cf = names("a", 3);
        let f3 = |s: &str| parse_form(s, &xy(), &cf).unwrap();
        let omega = f3(r"a1/\a2 + x*a2/\a3"); // |ω| = 2
        let eta = f3("a3 + y*a1");
        let lhs = contract_form(&x, &omega.wedge(&eta));
        let rhs = contract_form(&x, &omega)
            .wedge(&eta)
            .add(&omega.wedge(&contract_form(&x, &eta)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multivector_contraction_by_one_form() {
        assert!(contract_multi(&form("a1", 2), &mv("e1", 2))
            .scalar_part()
            .is_one());
        assert_eq!(
            contract_multi(&form("a1", 2), &mv(r"e1/\e2", 2)),
            mv("e2", 2)
        );
        assert_eq!(
            contract_multi(&form("a2", 2), &mv(r"e1/\e2", 2)),
            mv("-e1", 2)
        );
    }

    #[test]
    fn one_form_contraction_squares_to_zero() {
        let phi = form("a1 + x*a2", 3);
        let a = parse_multivector(r"e1/\e2/\e3 + y*e1/\e3 + e2", &xy(), &names("e", 3)).unwrap();
        let twice = contract_multi(&phi, &contract_multi(&phi, &a));
        assert!(twice.is_zero());
    }

    #[test]
    fn star_of_scalar_is_the_volume() {
        let mu = OddVolume::coordinate(2, 2);
        assert_eq!(mu.star(&Multivector::one(2, 2)).unwrap(), form(r"a1/\a2", 2));
    }

    #[test]
    fn star_of_top_multivector_is_signed_scalar() {
        // *_μ(X_1∧X_2) = -s in rank 2
        let mu = OddVolume::coordinate(2, 2);
        assert_eq!(mu.star(&mv(r"e1/\e2", 2)).unwrap(), form("-1", 2));
    }

    #[test]
    fn star_inverse_round_trip() {
        let s = crate::coeff::parse_scalar("x + 2", &xy()).unwrap();
        let mu = OddVolume::new(3, 2, s).unwrap();
        let a = parse_multivector(r"e1/\e2/\e3 + y*e1/\e3 + e2 + 5", &xy(), &names("e", 3))
            .unwrap();
        let back = mu.star_inv(&mu.star(&a).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn volume_equality_up_to_sign() {
        let mu = OddVolume::coordinate(2, 0);
        assert!(mu.same_up_to_sign(&mu.flip()));
        let nu = mu.scaled(&Coeff::int(0, 5)).unwrap();
        assert!(!mu.same_up_to_sign(&nu));
    }

    #[test]
    fn masks_enumerate_in_tuple_order() {
        let masks = masks_of_degree(4, 2);
        let tuples: Vec<Vec<usize>> = masks.iter().map(|&m| mask_to_tuple(m)).collect();
        assert_eq!(
            tuples,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(masks_of_degree(3, 0), vec![0]);
        assert_eq!(masks_of_degree(3, 3).len(), 1);
        assert!(masks_of_degree(2, 3).is_empty());
    }

    #[test]
    fn print_parse_round_trip() {
        let vars = xy();
        let frame = names("e", 3);
        let a = parse_multivector(
            r"(x + y)*e1/\e3 - 2*e2 + x^2*e1/\e2/\e3 + 1/2",
            &vars,
            &frame,
        )
        .unwrap();
        let s = a.to_expr_string(&vars, &frame);
        let b = parse_multivector(&s, &vars, &frame).unwrap();
        assert_eq!(a, b);
        assert_eq!(s, b.to_expr_string(&vars, &frame));
    }
}
