//! The chart-level Lie algebroid: anchor matrix and structure functions,
//! axiom validation, section brackets and the Schouten bracket.
//!
//! A rank-`n` algebroid over an `m`-dimensional chart stores
//! `ρ(X_i) = Σ_a ρ^a_i ∂_a` as an n×m matrix and the brackets
//! `[X_i, X_j] = Σ_k c^k_{ij} X_k` for `i < j`; antisymmetry is built into
//! the accessor, so inconsistent structure data cannot be represented.

use std::collections::BTreeMap;

use crate::coeff::Coeff;
use crate::error::Error;
use crate::exterior::{Form, Multivector};

/// Section of the algebroid in frame components: `X = Σ_i f^i X_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    nvars: usize,
    components: Vec<Coeff>,
}

impl Section {
    pub fn zero(n: usize, nvars: usize) -> Self {
        Section {
            nvars,
            components: vec![Coeff::zero(nvars); n],
        }
    }

    /// The `i`-th (0-based) frame section.
    pub fn basis(n: usize, nvars: usize, i: usize) -> Self {
        let mut s = Self::zero(n, nvars);
        s.components[i] = Coeff::one(nvars);
        s
    }

    pub fn from_components(nvars: usize, components: Vec<Coeff>) -> Self {
        assert!(components.iter().all(|c| c.nvars() == nvars));
        Section { nvars, components }
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn component(&self, i: usize) -> &Coeff {
        &self.components[i]
    }

    pub fn components(&self) -> &[Coeff] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Coeff::is_zero)
    }

    pub fn add(&self, other: &Section) -> Section {
        assert_eq!(self.n(), other.n());
        Section {
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Section) -> Section {
        assert_eq!(self.n(), other.n());
        Section {
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Section {
        Section {
            nvars: self.nvars,
            components: self.components.iter().map(|a| a * c).collect(),
        }
    }

    pub fn to_multivector(&self) -> Multivector {
        Multivector::from_terms(
            self.n(),
            self.nvars,
            self.components
                .iter()
                .enumerate()
                .map(|(i, c)| (1u64 << i, c.clone())),
        )
    }

    /// Extracts a section from a degree-1 multivector; `None` when any
    /// other degree is present.
    pub fn from_multivector(mv: &Multivector) -> Option<Section> {
        let mut s = Section::zero(mv.n(), mv.nvars());
        for (mask, c) in mv.terms() {
            if mask.count_ones() != 1 {
                return None;
            }
            s.components[mask.trailing_zeros() as usize] = c.clone();
        }
        Some(s)
    }
}

/// Residuals of the two structure axioms, one entry per frame triple and
/// frame pair. Zero residuals are kept so reports are exhaustive.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    /// `[X_i,[X_j,X_k]] - [[X_i,X_j],X_k] - [X_j,[X_i,X_k]]` per `i<j<k`.
    pub jacobi: Vec<((usize, usize, usize), Section)>,
    /// `ρ([X_i,X_j]) - [ρ(X_i), ρ(X_j)]` as a vector field, per `i<j`.
    pub anchor: Vec<((usize, usize), Vec<Coeff>)>,
}

impl ValidationReport {
    pub fn jacobi_ok(&self) -> bool {
        self.jacobi.iter().all(|(_, s)| s.is_zero())
    }

    pub fn anchor_ok(&self) -> bool {
        self.anchor
            .iter()
            .all(|(_, v)| v.iter().all(Coeff::is_zero))
    }

    pub fn passes(&self) -> bool {
        self.jacobi_ok() && self.anchor_ok()
    }
}

/// Lie algebroid presented on a single chart. Immutable after construction.
#[derive(Clone, Debug)]
pub struct LieAlgebroid {
    m: usize,
    n: usize,
    coord_names: Vec<String>,
    frame_names: Vec<String>,
    coframe_names: Vec<String>,
    /// `anchor[i][a] = ρ^a_i`.
    anchor: Vec<Vec<Coeff>>,
    /// `structure[(i,j)][k] = c^k_{ij}` for `i < j` (0-based); missing
    /// pairs bracket to zero.
    structure: BTreeMap<(usize, usize), Vec<Coeff>>,
}

pub fn default_frame_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

pub fn default_coframe_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

impl LieAlgebroid {
    pub fn new(
        coord_names: Vec<String>,
        frame_names: Vec<String>,
        coframe_names: Vec<String>,
        anchor: Vec<Vec<Coeff>>,
        brackets: BTreeMap<(usize, usize), Vec<Coeff>>,
    ) -> Result<Self, Error> {
        let m = coord_names.len();
        let n = frame_names.len();
        if coframe_names.len() != n {
            return Err(Error::schema("coframe", "coframe length differs from frame"));
        }
        if anchor.len() != n {
            return Err(Error::schema("anchor", format!("expected {n} rows")));
        }
        for (i, row) in anchor.iter().enumerate() {
            if row.len() != m {
                return Err(Error::schema(
                    format!("anchor[{i}]"),
                    format!("expected {m} columns"),
                ));
            }
            if row.iter().any(|c| c.nvars() != m) {
                return Err(Error::schema(
                    format!("anchor[{i}]"),
                    "entry over wrong variable set",
                ));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in coord_names
            .iter()
            .chain(&frame_names)
            .chain(&coframe_names)
        {
            if !seen.insert(name) {
                return Err(Error::schema(
                    "names",
                    format!("name `{name}` used more than once"),
                ));
            }
        }
        let mut structure = BTreeMap::new();
        for ((i, j), comps) in brackets {
            if i >= j || j >= n {
                return Err(Error::schema(
                    "brackets",
                    format!("bracket key ({},{}) out of order or range", i + 1, j + 1),
                ));
            }
            if comps.len() != n {
                return Err(Error::schema(
                    "brackets",
                    format!("bracket ({},{}) has wrong component count", i + 1, j + 1),
                ));
            }
            if comps.iter().any(|c| c.nvars() != m) {
                return Err(Error::schema(
                    "brackets",
                    format!(
                        "bracket ({},{}) entry over wrong variable set",
                        i + 1,
                        j + 1
                    ),
                ));
            }
            if comps.iter().any(|c| !c.is_zero()) {
                structure.insert((i, j), comps);
            }
        }
        Ok(LieAlgebroid {
            m,
            n,
            coord_names,
            frame_names,
            coframe_names,
            anchor,
            structure,
        })
    }

    /// The tangent algebroid of the chart: identity anchor, zero brackets.
    pub fn tangent(coord_names: Vec<String>) -> Self {
        let m = coord_names.len();
        let anchor = (0..m)
            .map(|i| {
                (0..m)
                    .map(|a| if a == i { Coeff::one(m) } else { Coeff::zero(m) })
                    .collect()
            })
            .collect();
        LieAlgebroid {
            m,
            n: m,
            coord_names,
            frame_names: default_frame_names(m),
            coframe_names: default_coframe_names(m),
            anchor,
            structure: BTreeMap::new(),
        }
    }

    pub fn base_dim(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn coord_names(&self) -> &[String] {
        &self.coord_names
    }

    pub fn frame_names(&self) -> &[String] {
        &self.frame_names
    }

    pub fn coframe_names(&self) -> &[String] {
        &self.coframe_names
    }

    /// `ρ^a_i` (0-based frame index `i`, coordinate index `a`).
    pub fn anchor_entry(&self, i: usize, a: usize) -> &Coeff {
        &self.anchor[i][a]
    }

    /// `c^k_{ij}` with antisymmetry handled here (0-based indices).
    pub fn structure_coeff(&self, i: usize, j: usize, k: usize) -> Coeff {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Coeff::zero(self.m),
            Ordering::Less => self
                .structure
                .get(&(i, j))
                .map(|v| v[k].clone())
                .unwrap_or_else(|| Coeff::zero(self.m)),
            Ordering::Greater => self
                .structure
                .get(&(j, i))
                .map(|v| -&v[k])
                .unwrap_or_else(|| Coeff::zero(self.m)),
        }
    }

    /// The stored bracket pairs `i < j` with a nonzero component.
    pub fn bracket_pairs(&self) -> impl Iterator<Item = (usize, usize, &Vec<Coeff>)> {
        self.structure.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// `[X_i, X_j]` as a section (0-based indices).
    pub fn bracket_frame(&self, i: usize, j: usize) -> Section {
        Section::from_components(
            self.m,
            (0..self.n).map(|k| self.structure_coeff(i, j, k)).collect(),
        )
    }

    /// `ρ(X)(f) = Σ_{i,a} f^i ρ^a_i ∂f/∂u^a`.
    pub fn anchor_apply(&self, x: &Section, f: &Coeff) -> Coeff {
        let mut acc = Coeff::zero(self.m);
        for a in 0..self.m {
            let df = f.partial(a);
            if df.is_zero() {
                continue;
            }
            for i in 0..self.n {
                let rho = &self.anchor[i][a];
                if rho.is_zero() || x.component(i).is_zero() {
                    continue;
                }
                acc = &acc + &(&(x.component(i) * rho) * &df);
            }
        }
        acc
    }

    /// Shortcut for `ρ(X_i)(f)`.
    pub fn anchor_apply_frame(&self, i: usize, f: &Coeff) -> Coeff {
        let mut acc = Coeff::zero(self.m);
        for a in 0..self.m {
            let rho = &self.anchor[i][a];
            if rho.is_zero() {
                continue;
            }
            let df = f.partial(a);
            if df.is_zero() {
                continue;
            }
            acc = &acc + &(rho * &df);
        }
        acc
    }

    /// Components of the vector field `ρ(X)` on the chart.
    pub fn anchor_vector(&self, x: &Section) -> Vec<Coeff> {
        (0..self.m)
            .map(|a| {
                let mut acc = Coeff::zero(self.m);
                for i in 0..self.n {
                    acc = &acc + &(x.component(i) * &self.anchor[i][a]);
                }
                acc
            })
            .collect()
    }

    /// Bracket of sections: bilinear over constants, Leibniz in each slot.
    pub fn bracket_sections(&self, x: &Section, y: &Section) -> Section {
        assert_eq!(x.n(), self.n);
        assert_eq!(y.n(), self.n);
        let mut components = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let mut acc = Coeff::zero(self.m);
            for (i, j, comps) in self.bracket_pairs() {
                // (x^i y^j - x^j y^i) c^k_{ij}
                if comps[k].is_zero() {
                    continue;
                }
                let amp = &(x.component(i) * y.component(j))
                    - &(x.component(j) * y.component(i));
                if !amp.is_zero() {
                    acc = &acc + &(&amp * &comps[k]);
                }
            }
            acc = &acc + &self.anchor_apply(x, y.component(k));
            acc = &acc - &self.anchor_apply(y, x.component(k));
            components.push(acc);
        }
        Section::from_components(self.m, components)
    }

    /// Axiom residuals; the presentation is a Lie algebroid exactly when
    /// every entry vanishes.
    pub fn validate(&self) -> ValidationReport {
        let mut jacobi = Vec::new();
        for i in 0..self.n {
            let xi = Section::basis(self.n, self.m, i);
            for j in i + 1..self.n {
                let xj = Section::basis(self.n, self.m, j);
                for k in j + 1..self.n {
                    let xk = Section::basis(self.n, self.m, k);
                    let lhs = self.bracket_sections(&xi, &self.bracket_sections(&xj, &xk));
                    let r1 = self.bracket_sections(&self.bracket_sections(&xi, &xj), &xk);
                    let r2 = self.bracket_sections(&xj, &self.bracket_sections(&xi, &xk));
                    jacobi.push(((i, j, k), lhs.sub(&r1).sub(&r2)));
                }
            }
        }
        let mut anchor = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                // ρ([X_i,X_j]) - [ρ(X_i), ρ(X_j)] componentwise on the chart
                let lhs = self.anchor_vector(&self.bracket_frame(i, j));
                let residual: Vec<Coeff> = (0..self.m)
                    .map(|a| {
                        let mut commutator = Coeff::zero(self.m);
                        for b in 0..self.m {
                            let term = &(&self.anchor[i][b] * &self.anchor[j][a].partial(b))
                                - &(&self.anchor[j][b] * &self.anchor[i][a].partial(b));
                            commutator = &commutator + &term;
                        }
                        &lhs[a] - &commutator
                    })
                    .collect();
                anchor.push(((i, j), residual));
            }
        }
        ValidationReport { jacobi, anchor }
    }

    fn basis_multivector(&self, mask: u64) -> Multivector {
        Multivector::from_terms(self.n, self.m, [(mask, Coeff::one(self.m))])
    }

    /// `[X_k, g·X_J]` for a frame section: degree-0 derivation along the
    /// frame brackets plus the anchor action on the coefficient.
    fn lie_frame_on_mono(&self, k: usize, g: &Coeff, j_mask: u64) -> Multivector {
        let mut out = Multivector::zero(self.n, self.m);
        let dg = self.anchor_apply_frame(k, g);
        if !dg.is_zero() {
            out = out.add(&Multivector::from_terms(self.n, self.m, [(j_mask, dg)]));
        }
        let mut rest = j_mask;
        while rest != 0 {
            let t = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let bracket = self.bracket_frame(k, t);
            if bracket.is_zero() {
                continue;
            }
            let bit = 1u64 << t;
            let left = self.basis_multivector(j_mask & (bit - 1));
            let right = self.basis_multivector(j_mask & !(bit | (bit - 1)));
            let replaced = left.wedge(&bracket.to_multivector()).wedge(&right);
            out = out.add(&replaced.scale(g));
        }
        out
    }

    /// `[g·X_J, f]` for a function `f`.
    fn bracket_mono_function(&self, g: &Coeff, j_mask: u64, f: &Coeff) -> Multivector {
        if j_mask == 0 {
            return Multivector::zero(self.n, self.m);
        }
        let last = 63 - j_mask.leading_zeros() as usize;
        let rest = j_mask & !(1u64 << last);
        // [b'∧X, f] = -[b', f]∧X + b'·ρ(X)(f)
        let t1 = self
            .bracket_mono_function(g, rest, f)
            .wedge(&self.basis_multivector(1u64 << last))
            .neg();
        let df = self.anchor_apply_frame(last, f);
        let t2 = Multivector::from_terms(self.n, self.m, [(rest, g * &df)]);
        t1.add(&t2)
    }

    fn schouten_mono(&self, f: &Coeff, i_mask: u64, g: &Coeff, j_mask: u64) -> Multivector {
        if i_mask == 0 {
            if j_mask == 0 {
                return Multivector::zero(self.n, self.m);
            }
            // [f, b] = -(-1)^{|b|-1} [b, f]
            let inner = self.bracket_mono_function(g, j_mask, f);
            return if (j_mask.count_ones() - 1) % 2 == 0 {
                inner.neg()
            } else {
                inner
            };
        }
        // peel the highest frame index: a = a'∧X, then
        // [a'∧X, b] = (-1)^{|b|-1} [a', b]∧X + a'∧[X, b]
        let last = 63 - i_mask.leading_zeros() as usize;
        let rest = i_mask & !(1u64 << last);
        let x_last = self.basis_multivector(1u64 << last);
        let mut t1 = self.schouten_mono(f, rest, g, j_mask).wedge(&x_last);
        if j_mask.count_ones() % 2 == 0 {
            // (-1)^{|b|-1} with |b| even
            t1 = t1.neg();
        }
        let a_rest = Multivector::from_terms(self.n, self.m, [(rest, f.clone())]);
        let t2 = a_rest.wedge(&self.lie_frame_on_mono(last, g, j_mask));
        t1.add(&t2)
    }

    /// Schouten bracket on multivectors, extended from sections and
    /// functions by bilinear recursion over stored monomials.
    pub fn schouten(&self, a: &Multivector, b: &Multivector) -> Multivector {
        assert_eq!(a.n(), self.n);
        assert_eq!(b.n(), self.n);
        let mut out = Multivector::zero(self.n, self.m);
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out = out.add(&self.schouten_mono(ca, ma, cb, mb));
            }
        }
        out
    }

    /// Zero element of the multivector algebra over this algebroid.
    pub fn zero_multivector(&self) -> Multivector {
        Multivector::zero(self.n, self.m)
    }

    pub fn parse_multivector(&self, src: &str) -> Result<Multivector, Error> {
        crate::exterior::parse_multivector(src, &self.coord_names, &self.frame_names)
    }

    pub fn parse_form(&self, src: &str) -> Result<Form, Error> {
        crate::exterior::parse_form(src, &self.coord_names, &self.coframe_names)
    }

    pub fn parse_scalar(&self, src: &str) -> Result<Coeff, Error> {
        crate::coeff::parse_scalar(src, &self.coord_names)
    }

    /// Parses a section (a pure degree-1 multivector expression).
    pub fn parse_section(&self, src: &str) -> Result<Section, Error> {
        let mv = self.parse_multivector(src)?;
        Section::from_multivector(&mv).ok_or_else(|| {
            Error::schema("section", "expression is not homogeneous of degree 1")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn aff1_validates() {
        assert!(corpus::aff1().validate().passes());
    }

    #[test]
    fn abelian_validates() {
        assert!(corpus::abelian(4).validate().passes());
    }

    #[test]
    fn rank3_constant_triple_validates() {
        assert!(corpus::rank3_triple().validate().passes());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let e = corpus::broken_jacobi3();
        let report = e.validate();
        assert!(!report.passes());
        assert!(!report.jacobi_ok());
        // the (1,2,3) residual is -X_3 by hand expansion:
        // [[X_1,X_2],X_3] = [X_2,X_3] = X_3 and the other two terms vanish
        let (_, residual) = &report.jacobi[0];
        let expected = Section::basis(3, 0, 2).scale(&Coeff::int(0, -1));
        assert_eq!(residual, &expected);
    }

    #[test]
    fn anchor_violation_is_reported() {
        let e = corpus::broken_aff1_action();
        let report = e.validate();
        assert!(report.jacobi_ok());
        assert!(!report.anchor_ok());
    }

    #[test]
    fn bracket_reads_structure_functions() {
        let e = corpus::aff1();
        let x1 = Section::basis(2, 0, 0);
        let x2 = Section::basis(2, 0, 1);
        assert_eq!(e.bracket_sections(&x1, &x2), x2);
    }

    #[test]
    fn bracket_satisfies_leibniz_on_tangent_plane() {
        // on TM over the plane: [x·X_1, X_2] = 0 and [X_1, x·X_2] = X_2
        let e = corpus::tangent_plane();
        let x = e.parse_scalar("x").unwrap();
        let x1 = Section::basis(2, 2, 0);
        let x2 = Section::basis(2, 2, 1);
        assert!(e.bracket_sections(&x1.scale(&x), &x2).is_zero());
        assert_eq!(e.bracket_sections(&x1, &x2.scale(&x)), x2);
    }

    #[test]
    fn bracket_is_alternating() {
        let e = corpus::tangent_plane();
        let x = e.parse_section("x*e1 + (y^2 - 1)*e2").unwrap();
        assert!(e.bracket_sections(&x, &x).is_zero());
    }

    #[test]
    fn anchor_application() {
        let e = corpus::tangent_plane();
        let xy = e.parse_scalar("x*y").unwrap();
        let x1 = Section::basis(2, 2, 0);
        assert_eq!(e.anchor_apply(&x1, &xy), e.parse_scalar("y").unwrap());
        // m = 0: always zero
        let a = corpus::aff1();
        assert!(a
            .anchor_apply(&Section::basis(2, 0, 0), &Coeff::int(0, 7))
            .is_zero());
    }

    #[test]
    fn schouten_leibniz_example() {
        // [X_1, X_1∧X_2] = X_1∧[X_1,X_2] = X_1∧X_2 on aff(1)
        let e = corpus::aff1();
        let x1 = e.parse_multivector("e1").unwrap();
        let top = e.parse_multivector(r"e1/\e2").unwrap();
        assert_eq!(e.schouten(&x1, &top), top);
    }

    #[test]
    fn schouten_of_functions_vanishes() {
        let e = corpus::tangent_plane();
        let f = e.parse_multivector("x^2").unwrap();
        let g = e.parse_multivector("y + 1").unwrap();
        assert!(e.schouten(&f, &g).is_zero());
    }

    #[test]
    fn schouten_restricts_to_section_bracket_and_anchor() {
        let e = corpus::tangent_plane();
        let x = e.parse_section("x*e1 + y*e2").unwrap();
        let y = e.parse_section("e1 - x*e2").unwrap();
        let via_schouten = e.schouten(&x.to_multivector(), &y.to_multivector());
        assert_eq!(
            Section::from_multivector(&via_schouten).unwrap(),
            e.bracket_sections(&x, &y)
        );
        // degree (1,0): anchor application
        let f = e.parse_scalar("x*y^2").unwrap();
        let fm = Multivector::scalar(2, 2, f.clone());
        assert_eq!(
            e.schouten(&x.to_multivector(), &fm).scalar_part(),
            e.anchor_apply(&x, &f)
        );
    }

    #[test]
    fn schouten_graded_antisymmetry() {
        let e = corpus::tangent_plane();
        let a = e.parse_multivector(r"x*e1/\e2 + y*e1").unwrap();
        let b = e.parse_multivector("e2 + x^2").unwrap();
        for (pa, ca) in a.components() {
            for (pb, cb) in b.components() {
                let lhs = e.schouten(&ca, &cb);
                let mut rhs = e.schouten(&cb, &ca);
                // [a,b] = -(-1)^{(|a|-1)(|b|-1)} [b,a]
                if ((pa as i32 - 1) * (pb as i32 - 1)) % 2 == 0 {
                    rhs = rhs.neg();
                }
                assert_eq!(lhs, rhs, "degrees ({pa},{pb})");
            }
        }
    }

    #[test]
    fn schouten_graded_jacobi_on_random_triples() {
        for e in [corpus::heisenberg3(), corpus::tangent_plane()] {
            let mut rng = crate::sample::rng(11);
            for _ in 0..25 {
                let a = crate::sample::random_homogeneous(&e, &mut rng);
                let b = crate::sample::random_homogeneous(&e, &mut rng);
                let c = crate::sample::random_homogeneous(&e, &mut rng);
                let (pa, pb) = match (a.degree(), b.degree()) {
                    (Some(pa), Some(pb)) => (pa, pb),
                    _ => continue,
                };
                // [a,[b,c]] = [[a,b],c] + (-1)^{(|a|-1)(|b|-1)} [b,[a,c]]
                let lhs = e.schouten(&a, &e.schouten(&b, &c));
                let t1 = e.schouten(&e.schouten(&a, &b), &c);
                let mut t2 = e.schouten(&b, &e.schouten(&a, &c));
                if ((pa as i32 - 1) * (pb as i32 - 1)) % 2 != 0 {
                    t2 = t2.neg();
                }
                assert_eq!(lhs, t1.add(&t2));
            }
        }
    }

    #[test]
    fn degenerate_ranks_are_legal() {
        // m = 0 Lie algebra and n = 0 bundle both behave
        let point = LieAlgebroid::tangent(vec![]);
        assert_eq!(point.rank(), 0);
        assert!(point.validate().passes());
        assert!(point
            .anchor_apply(&Section::zero(0, 0), &Coeff::int(0, 3))
            .is_zero());
        assert!(point
            .schouten(&Multivector::one(0, 0), &Multivector::one(0, 0))
            .is_zero());
    }
}
