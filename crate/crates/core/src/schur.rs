//! Schur functions of differences of bundles, evaluated exactly.
//!
//! Two routes are provided and cross-checked in tests:
//!  * the root oracle: bundles carry formal Chern roots and everything is
//!    expanded in the root ring;
//!  * the Chern-class route: Segre coefficients are computed as series in
//!    `c[i]`, `cp[j]` truncated at the given ranks, which stays small even
//!    at high degree.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::One;
use once_cell::sync::Lazy;

use crate::basis::SchurExpansion;
use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{Coeff, Monomial, Poly, VarKind, Variable};

/// A formal bundle given by its list of Chern roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleSpec {
    roots: Vec<Variable>,
}

impl BundleSpec {
    pub fn new(roots: Vec<Variable>) -> Self {
        BundleSpec { roots }
    }

    /// Rank-`m` bundle with roots `a1..am`.
    pub fn a_roots(m: usize) -> Self {
        BundleSpec {
            roots: (1..=m as u32).map(Variable::root_a).collect(),
        }
    }

    /// Rank-`n` bundle with roots `b1..bn`.
    pub fn b_roots(n: usize) -> Self {
        BundleSpec {
            roots: (1..=n as u32).map(Variable::root_b).collect(),
        }
    }

    /// The zero bundle.
    pub fn empty() -> Self {
        BundleSpec { roots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Variable] {
        &self.roots
    }
}

/// The virtual bundle `E - F`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualPair {
    pub e: BundleSpec,
    pub f: BundleSpec,
}

impl VirtualPair {
    pub fn new(e: BundleSpec, f: BundleSpec) -> Self {
        VirtualPair { e, f }
    }

    /// `E - F` with `E` of rank `m` on roots `a*` and `F` of rank `n` on `b*`.
    pub fn of_ranks(m: usize, n: usize) -> Self {
        VirtualPair {
            e: BundleSpec::a_roots(m),
            f: BundleSpec::b_roots(n),
        }
    }
}

/// Elementary symmetric polynomial `e_k` of the given roots.
pub fn elementary(roots: &[Variable], k: usize) -> Poly {
    if k > roots.len() {
        return Poly::zero();
    }
    // e over growing alphabets: E(i, j) = E(i-1, j) + x_i E(i-1, j-1)
    let mut table = vec![Poly::zero(); k + 1];
    table[0] = Poly::one();
    for &x in roots {
        for j in (1..=k).rev() {
            let bumped = table[j - 1].mul(&Poly::var(x));
            table[j] = table[j].add(&bumped);
        }
    }
    table[k].clone()
}

/// Complete homogeneous symmetric polynomial `h_k` of the given roots.
pub fn complete_homogeneous(roots: &[Variable], k: usize) -> Poly {
    if roots.is_empty() {
        return if k == 0 { Poly::one() } else { Poly::zero() };
    }
    // H(i, j) = H(i-1, j) + x_i H(i, j-1)
    let mut table = vec![Poly::zero(); k + 1];
    table[0] = Poly::one();
    for &x in roots {
        for j in 1..=k {
            let bumped = table[j].add(&table[j - 1].mul(&Poly::var(x)));
            table[j] = bumped;
        }
    }
    table[k].clone()
}

/// Degree-`i` Segre coefficient of the virtual bundle: the coefficient of
/// `prod_b (1-b) / prod_a (1-a)`, i.e. `sum_j h_{i-j}(a) (-1)^j e_j(b)`.
pub fn segre_coefficient(pair: &VirtualPair, i: usize) -> Poly {
    let mut out = Poly::zero();
    for j in 0..=i.min(pair.f.rank()) {
        let h = complete_homogeneous(pair.e.roots(), i - j);
        let e = elementary(pair.f.roots(), j);
        let signed = if j % 2 == 0 { h.mul(&e) } else { h.mul(&e).neg() };
        out = out.add(&signed);
    }
    out
}

/// Expands an `l x l` determinant whose `(p,q)` entry is `entry(index)` for
/// `index = parts[p] + p - q` (entries with negative index are zero, index 0
/// is the unit). Dynamic programming over column subsets, pruning partial
/// minors whose degree already exceeds `target_degree`.
pub(crate) fn determinant_by_minors(
    parts: &[u32],
    target_degree: u32,
    mut entry: impl FnMut(usize) -> Poly,
) -> Poly {
    let l = parts.len();
    if l == 0 {
        return Poly::one();
    }
    let mut cache: HashMap<usize, Poly> = HashMap::new();
    let mut states: HashMap<u32, Poly> = HashMap::new();
    states.insert(0, Poly::one());
    for p in 0..l {
        let mut next: HashMap<u32, Poly> = HashMap::new();
        for (mask, minor) in &states {
            let minor_deg = minor.max_degree();
            for q in 0..l {
                if mask & (1 << q) != 0 {
                    continue;
                }
                let idx = parts[p] as i64 + p as i64 - q as i64;
                if idx < 0 {
                    continue;
                }
                let inversions = (mask >> (q + 1)).count_ones();
                let contribution = if idx == 0 {
                    minor.clone()
                } else {
                    if minor_deg + idx as u32 > target_degree {
                        continue;
                    }
                    let ent = cache
                        .entry(idx as usize)
                        .or_insert_with(|| entry(idx as usize));
                    minor.mul_truncated(ent, Some(target_degree))
                };
                let signed = if inversions % 2 == 0 {
                    contribution
                } else {
                    contribution.neg()
                };
                let new_mask = mask | (1 << q);
                let slot = next.entry(new_mask).or_insert_with(Poly::zero);
                *slot = slot.add(&signed);
            }
        }
        states = next;
    }
    states.remove(&((1u32 << l) - 1)).unwrap_or_else(Poly::zero)
}

/// The Schur function `S_I(E - F)` as a polynomial in the Chern roots,
/// by the defining determinant `|S_{i_p + p - q}|`.
pub fn schur_super(i: &Partition, pair: &VirtualPair) -> Poly {
    determinant_by_minors(i.parts(), i.weight(), |k| segre_coefficient(pair, k))
}

/// `sum_I alpha_I S_I(E - F)` in the root ring.
pub fn evaluate_expansion(expansion: &SchurExpansion, pair: &VirtualPair) -> Poly {
    let mut out = Poly::zero();
    for (part, coeff) in expansion.iter() {
        out = out.add(&schur_super(part, pair).scale(coeff));
    }
    out
}

/// Substitutes every root by its negative: each degree-`d` monomial picks up
/// `(-1)^d`. This realizes passing from `E - F` to `E* - F*`.
pub fn negate_roots(p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let c = if m.degree() % 2 == 0 { c.clone() } else { -c.clone() };
        out.add_term(m.clone(), c);
    }
    out
}

/// Replaces each basis term `alpha_I S_I` by `alpha_I S_{I~}`: the expansion
/// of the dual virtual bundle read through the duality identity.
pub fn dualize(expansion: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (part, coeff) in expansion.iter() {
        out.add_term(part.conjugate(), coeff.clone());
    }
    out
}

/// Rewrites a polynomial symmetric in the `a`-roots and in the `b`-roots as
/// a polynomial in `c[i] = e_i(a)` (for `i <= m`) and `cp[j] = e_j(b)`.
///
/// Classical leading-term elimination: the lex-leading monomial of a
/// symmetric polynomial has weakly decreasing exponents, and the matching
/// product of elementary symmetric polynomials removes it.
pub fn symmetrize_to_chern(p: &Poly, m: usize, n: usize) -> Result<Poly, Error> {
    let a_vars: Vec<Variable> = (1..=m as u32).map(Variable::root_a).collect();
    let b_vars: Vec<Variable> = (1..=n as u32).map(Variable::root_b).collect();
    if !p.vars_all(|v| {
        (v.kind == VarKind::RootA && v.index as usize <= m)
            || (v.kind == VarKind::RootB && v.index as usize <= n)
    }) {
        return Err(Error::WrongVariables {
            expected: format!("roots a1..a{m}, b1..b{n}"),
            found: "other variables".to_string(),
        });
    }

    let mut rest = p.clone();
    let mut out = Poly::zero();
    while !rest.is_zero() {
        let (mono, coeff) = leading_by_exponents(&rest, &a_vars, &b_vars);
        let alpha: Vec<u32> = a_vars.iter().map(|v| mono.exponent_of(*v)).collect();
        let beta: Vec<u32> = b_vars.iter().map(|v| mono.exponent_of(*v)).collect();
        check_decreasing(&alpha, &a_vars, p)?;
        check_decreasing(&beta, &b_vars, p)?;
        let (c_mono, e_poly) = chern_monomial(&alpha, &beta, &a_vars, &b_vars);
        out.add_term(c_mono, coeff.clone());
        rest = rest.sub(&e_poly.scale(&coeff));
    }
    Ok(out)
}

/// Lex-leading term with respect to the exponent vector on `(a..., b...)`.
fn leading_by_exponents(p: &Poly, a_vars: &[Variable], b_vars: &[Variable]) -> (Monomial, Coeff) {
    let mut best: Option<(Vec<u32>, Monomial, Coeff)> = None;
    for (m, c) in p.terms() {
        let key: Vec<u32> = a_vars
            .iter()
            .chain(b_vars.iter())
            .map(|v| m.exponent_of(*v))
            .collect();
        if best.as_ref().map_or(true, |(bk, _, _)| key > *bk) {
            best = Some((key, m.clone(), c.clone()));
        }
    }
    let (_, m, c) = best.expect("nonzero polynomial");
    (m, c)
}

fn check_decreasing(exps: &[u32], vars: &[Variable], p: &Poly) -> Result<(), Error> {
    for w in 0..exps.len().saturating_sub(1) {
        if exps[w] < exps[w + 1] {
            // pin down a violating transposition for the error message
            return Err(Error::NotSymmetric {
                a: vars[w].to_string(),
                b: vars[w + 1].to_string(),
            });
        }
    }
    let _ = p;
    Ok(())
}

/// The `c`-monomial with lex-leading root term `a^alpha b^beta`, together
/// with its expansion in the root ring.
fn chern_monomial(
    alpha: &[u32],
    beta: &[u32],
    a_vars: &[Variable],
    b_vars: &[Variable],
) -> (Monomial, Poly) {
    let mut mono = Monomial::one();
    let mut poly = Poly::one();
    let emit = |exps: &[u32], vars: &[Variable], mk: fn(u32) -> Variable, mono: &mut Monomial, poly: &mut Poly| {
        for i in 0..exps.len() {
            let mult = exps[i] - exps.get(i + 1).copied().unwrap_or(0);
            if mult > 0 {
                *mono = mono.mul(&Monomial::var(mk(i as u32 + 1), mult));
                let e = cached_elementary(vars, i + 1);
                *poly = poly.mul(&e.pow(mult));
            }
        }
    };
    emit(alpha, a_vars, Variable::c, &mut mono, &mut poly);
    emit(beta, b_vars, Variable::cp, &mut mono, &mut poly);
    (mono, poly)
}

static ELEM_CACHE: Lazy<Mutex<HashMap<(Vec<Variable>, usize), Poly>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn cached_elementary(vars: &[Variable], k: usize) -> Poly {
    let key = (vars.to_vec(), k);
    if let Some(p) = ELEM_CACHE.lock().unwrap().get(&key) {
        return p.clone();
    }
    let p = elementary(vars, k);
    ELEM_CACHE.lock().unwrap().insert(key, p.clone());
    p
}

/// Segre coefficients of a rank-`(m,n)` virtual bundle directly as
/// polynomials in `c[1..m]`, `cp[1..n]`: the series
/// `(sum_j (-1)^j cp_j) / (sum_i (-1)^i c_i)` inverted degree by degree.
pub struct ChernSeries {
    m: usize,
    n: usize,
    coeffs: Vec<Poly>,
}

impl ChernSeries {
    pub fn new(m: usize, n: usize) -> Self {
        ChernSeries {
            m,
            n,
            coeffs: vec![Poly::one()],
        }
    }

    pub fn coefficient(&mut self, k: usize) -> Poly {
        while self.coeffs.len() <= k {
            let k = self.coeffs.len();
            // S_k = (-1)^k cp_k - sum_{i=1..min(k,m)} (-1)^i c_i S_{k-i}
            let mut s = if k <= self.n {
                let cp = Poly::var(Variable::cp(k as u32));
                if k % 2 == 0 {
                    cp
                } else {
                    cp.neg()
                }
            } else {
                Poly::zero()
            };
            for i in 1..=k.min(self.m) {
                let ci = Poly::var(Variable::c(i as u32));
                let prod = ci.mul(&self.coeffs[k - i]);
                s = if i % 2 == 0 { s.sub(&prod) } else { s.add(&prod) };
            }
            self.coeffs.push(s);
        }
        self.coeffs[k].clone()
    }
}

/// `S_I(E - F)` as a polynomial in `c[1..m]`, `cp[1..n]`, via the series
/// route. Agrees with symmetrizing the root evaluation.
pub fn schur_super_chern(i: &Partition, m: usize, n: usize) -> Poly {
    let mut series = ChernSeries::new(m, n);
    determinant_by_minors(i.parts(), i.weight(), |k| series.coefficient(k))
}

static CHERN_IMAGE_CACHE: Lazy<Mutex<HashMap<(Partition, usize, usize), Poly>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Chern-variable image of `S_I` at ranks `(m,n)`, computed from the root
/// oracle by root elimination and memoized.
pub fn chern_image(i: &Partition, m: usize, n: usize) -> Poly {
    let key = (i.clone(), m, n);
    if let Some(p) = CHERN_IMAGE_CACHE.lock().unwrap().get(&key) {
        return p.clone();
    }
    let root_poly = schur_super(i, &VirtualPair::of_ranks(m, n));
    let img = symmetrize_to_chern(&root_poly, m, n).expect("root evaluation is symmetric");
    CHERN_IMAGE_CACHE.lock().unwrap().insert(key, img.clone());
    img
}

/// Checks that raising both ranks by one and specializing the top Chern
/// classes to zero recovers the rank-`(m,n)` polynomial. Both sides are
/// compared as exact polynomials in `c`/`cp` variables.
pub fn check_suspension_stability(i: &Partition, m: usize, n: usize) -> bool {
    let big = chern_image(i, m + 1, n + 1)
        .kill_var(Variable::c(m as u32 + 1))
        .kill_var(Variable::cp(n as u32 + 1));
    let small = chern_image(i, m, n);
    big == small
}

/// All semistandard tableaux of shape `I` with entries `1..=alphabet`,
/// summed as monomials in `a1..a_alphabet`. Independent brute-force oracle
/// for the determinant.
pub fn tableau_polynomial(i: &Partition, alphabet: usize) -> Poly {
    let shape = i.decreasing();
    let rows = shape.len();
    if rows == 0 {
        return Poly::one();
    }
    let mut tableau: Vec<Vec<u32>> = shape.iter().map(|&w| vec![0; w as usize]).collect();
    let mut out = Poly::zero();
    fill(&mut tableau, 0, 0, alphabet as u32, &mut out);
    return out;

    fn fill(t: &mut Vec<Vec<u32>>, r: usize, c: usize, max: u32, out: &mut Poly) {
        if r == t.len() {
            let mut mono = Monomial::one();
            for row in t.iter() {
                for &v in row {
                    mono = mono.mul(&Monomial::var(Variable::root_a(v), 1));
                }
            }
            out.add_term(mono, Coeff::one());
            return;
        }
        if c == t[r].len() {
            fill(t, r + 1, 0, max, out);
            return;
        }
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(t[r][c - 1]); // weakly increasing along rows
        }
        if r > 0 {
            lo = lo.max(t[r - 1][c] + 1); // strictly increasing down columns
        }
        for v in lo..=max {
            t[r][c] = v;
            fill(t, r, c + 1, max, out);
        }
        t[r][c] = 0;
    }
}
