//! Exact division and multivariate gcd over the rationals.
//!
//! The gcd uses the primitive polynomial remainder sequence: pick a main
//! variable, split both operands into content and primitive part, run
//! pseudo-division on the primitive parts and recurse on the contents. The
//! inputs here stay tiny (metric determinants, volume ratios), so the simple
//! PRS is plenty.

use super::poly::Poly;

/// Quotient `f / g` when the division is exact, `None` otherwise.
pub fn div_exact(f: &Poly, g: &Poly) -> Option<Poly> {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let nvars = f.nvars();
    let mut rem = f.clone();
    let mut quo = Poly::zero(nvars);
    let (gm, gc) = {
        let (m, c) = g.leading().unwrap();
        (m.clone(), c.clone())
    };
    while !rem.is_zero() {
        let (rm, rc) = {
            let (m, c) = rem.leading().unwrap();
            (m.clone(), c.clone())
        };
        let qm = rm.checked_div(&gm)?;
        let qc = rc / &gc;
        let qt = Poly::from_terms(nvars, [(qm, qc)]);
        rem = &rem - &(&qt * g);
        quo = &quo + &qt;
    }
    Some(quo)
}

/// Monic gcd of two polynomials; zero when both are zero.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    assert_eq!(f.nvars(), g.nvars());
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one(f.nvars());
    }
    // Main variable: the highest-index variable occurring in either operand.
    let v = (0..f.nvars())
        .rev()
        .find(|&i| f.degree_in(i) > 0 || g.degree_in(i) > 0)
        .expect("non-constant polynomial has an active variable");
    if f.degree_in(v) == 0 {
        // g involves v, f does not: common divisors are v-free and divide
        // every v-coefficient of g.
        return gcd(f, &content(&coeffs_in(g, v)));
    }
    if g.degree_in(v) == 0 {
        return gcd(&content(&coeffs_in(f, v)), g);
    }

    let fc = coeffs_in(f, v);
    let gc = coeffs_in(g, v);
    let cont_f = content(&fc);
    let cont_g = content(&gc);
    let cont = gcd(&cont_f, &cont_g);

    let mut a = divide_out(&fc, &cont_f);
    let mut b = divide_out(&gc, &cont_g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        let cont_r = content(&r);
        a = b;
        b = divide_out(&r, &cont_r);
    }
    let pp = from_coeffs_in(&b, v, f.nvars());
    (&cont * &pp).monic()
}

/// Least common multiple, monic; zero if either input is zero.
pub fn lcm(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() || g.is_zero() {
        return Poly::zero(f.nvars());
    }
    let d = gcd(f, g);
    let q = div_exact(f, &d).expect("gcd divides its operand");
    (&q * g).monic()
}

/// Coefficient list of `f` viewed as univariate in `v`; index = power of
/// `v`, entries are v-free polynomials. The list is trimmed (no zero at the
/// top) and empty exactly for the zero polynomial.
fn coeffs_in(f: &Poly, v: usize) -> Vec<Poly> {
    let d = f.degree_in(v) as usize;
    let mut out = vec![Poly::zero(f.nvars()); d + 1];
    for (m, c) in f.terms() {
        let e = m.exponent(v) as usize;
        let mut stripped = m.clone();
        stripped.0[v] = 0;
        out[e].add_term(stripped, c.clone());
    }
    trim(&mut out);
    out
}

fn from_coeffs_in(coeffs: &[Poly], v: usize, nvars: usize) -> Poly {
    let mut out = Poly::zero(nvars);
    for (e, c) in coeffs.iter().enumerate() {
        for (m, q) in c.terms() {
            let mut raised = m.clone();
            raised.0[v] = e as u32;
            out.add_term(raised, q.clone());
        }
    }
    out
}

fn trim(coeffs: &mut Vec<Poly>) {
    while coeffs.last().map_or(false, Poly::is_zero) {
        coeffs.pop();
    }
}

/// Gcd of all coefficients (the content with respect to the main variable).
fn content(coeffs: &[Poly]) -> Poly {
    let mut acc = Poly::zero(coeffs.first().map_or(0, Poly::nvars));
    for c in coeffs {
        acc = gcd(&acc, c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn divide_out(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                div_exact(c, d).expect("content divides every coefficient")
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` in the main variable (both as coefficient
/// lists, `b` nonempty). Multiplies through by the leading coefficient of
/// `b` at every step, so no coefficient division is ever needed.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r: Vec<Poly> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r := lb * r - lr * x^(dr-db) * b
        let shift = dr - db;
        let mut next = vec![Poly::zero(lr.nvars()); dr]; // degree drops
        for (i, item) in next.iter_mut().enumerate() {
            let mut t = if i < r.len() - 1 {
                lb * &r[i]
            } else {
                Poly::zero(lr.nvars())
            };
            if i >= shift && i - shift < db {
                t = &t - &(&lr * &b[i - shift]);
            }
            *item = t;
        }
        r = next;
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}
