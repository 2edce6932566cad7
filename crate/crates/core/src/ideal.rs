//! Conductors of ring extensions, primality tests, radicals and integrality.
//!
//! Every test that can fail also has a `*_witness` form returning the first
//! counterexample in canonical (index) order.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Caps, RingTable};
use crate::subset::Subset;
use crate::substructures::{enumerate_ideals, is_ideal, is_maximal_subring, is_subring, product_span, Scope, Side};

/// A unital subring `R ⊊ T` together with its three conductors.
///
/// `cond_l = {x : Tx ⊆ R}`, `cond_r = {x : xT ⊆ R}` and `cond = {x : TxT ⊆ R}`.
#[derive(Clone, Debug)]
pub struct ExtensionPair {
    t: Arc<RingTable>,
    r: Subset,
    maximal: bool,
    cond: Subset,
    cond_l: Subset,
    cond_r: Subset,
}

impl ExtensionPair {
    pub fn new(t: Arc<RingTable>, r: Subset) -> Result<Self> {
        t.owns(&r)?;
        if !is_subring(&t, &r) {
            return Err(Error::NotSubring);
        }
        if r.is_full() {
            return Err(Error::NotProperSubring);
        }
        let maximal = is_maximal_subring(&t, &r)?;
        let cond_l = t.subset_where(|x| t.elements().all(|y| r.contains(t.mul(y, x))));
        let cond_r = t.subset_where(|x| t.elements().all(|y| r.contains(t.mul(x, y))));
        let cond = t.subset_where(|x| {
            t.elements()
                .all(|y| t.elements().all(|z| r.contains(t.mul(t.mul(y, x), z))))
        });
        Ok(ExtensionPair { t, r, maximal, cond, cond_l, cond_r })
    }

    pub fn t(&self) -> &RingTable {
        &self.t
    }

    pub fn t_arc(&self) -> &Arc<RingTable> {
        &self.t
    }

    pub fn r(&self) -> &Subset {
        &self.r
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    pub fn t_scope(&self) -> Scope<'_> {
        Scope::whole(&self.t)
    }

    pub fn r_scope(&self) -> Scope<'_> {
        Scope::new(&self.t, self.r.clone()).expect("validated at construction")
    }

    /// Left, right or two-sided conductor.
    pub fn conductor(&self, side: Side) -> &Subset {
        match side {
            Side::Left => &self.cond_l,
            Side::Right => &self.cond_r,
            Side::TwoSided => &self.cond,
        }
    }

    pub fn cond(&self) -> &Subset {
        &self.cond
    }

    pub fn cond_l(&self) -> &Subset {
        &self.cond_l
    }

    pub fn cond_r(&self) -> &Subset {
        &self.cond_r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimalityKind {
    /// `aSb ⊆ P ⇒ a ∈ P or b ∈ P`, for a two-sided ideal.
    Prime,
    /// `aSa ⊆ P ⇒ a ∈ P`.
    Semiprime,
    /// `ab ∈ P ⇒ a ∈ P or b ∈ P`.
    CompletelyPrime,
    /// For a right ideal: `aP ⊆ P` and `ab ∈ P` imply `a ∈ P` or `b ∈ P`.
    CompletelyPrimeRight,
    /// `aSb ⊆ P ⇒ a ∈ P or b ∈ P`, for a left or right ideal.
    PrimeOneSided,
}

impl fmt::Display for PrimalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimalityKind::Prime => "prime",
            PrimalityKind::Semiprime => "semiprime",
            PrimalityKind::CompletelyPrime => "completely prime",
            PrimalityKind::CompletelyPrimeRight => "completely prime right",
            PrimalityKind::PrimeOneSided => "prime one-sided",
        })
    }
}

fn require_proper(scope: &Scope<'_>, p: &Subset, side: Side) -> Result<()> {
    scope.ring().owns(p)?;
    if !is_ideal(scope, p, side) {
        return Err(Error::NotIdeal(side));
    }
    if p == scope.set() {
        return Err(Error::ImproperIdeal);
    }
    Ok(())
}

fn outside<'a>(scope: &'a Scope<'_>, p: &'a Subset) -> impl Iterator<Item = usize> + 'a {
    scope.elements().iter().copied().filter(move |&x| !p.contains(x))
}

/// First `(a, b)` outside `p` with `a·S·b ⊆ p`, skipping validation.
fn sandwich_witness(scope: &Scope<'_>, p: &Subset) -> Option<(usize, usize)> {
    let t = scope.ring();
    for a in outside(scope, p) {
        for b in outside(scope, p) {
            if scope.elements().iter().all(|&s| p.contains(t.mul(t.mul(a, s), b))) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Counterexample to primality of the proper two-sided ideal `p` in `scope`.
pub fn prime_witness(scope: &Scope<'_>, p: &Subset) -> Result<Option<(usize, usize)>> {
    require_proper(scope, p, Side::TwoSided)?;
    Ok(sandwich_witness(scope, p))
}

pub fn is_prime_ideal(scope: &Scope<'_>, p: &Subset) -> Result<bool> {
    Ok(prime_witness(scope, p)?.is_none())
}

/// Some `a ∉ p` with `a·S·a ⊆ p`.
pub fn semiprime_witness(scope: &Scope<'_>, p: &Subset) -> Result<Option<usize>> {
    require_proper(scope, p, Side::TwoSided)?;
    let t = scope.ring();
    Ok(outside(scope, p)
        .find(|&a| scope.elements().iter().all(|&s| p.contains(t.mul(t.mul(a, s), a)))))
}

pub fn is_semiprime_ideal(scope: &Scope<'_>, p: &Subset) -> Result<bool> {
    Ok(semiprime_witness(scope, p)?.is_none())
}

/// Some `a, b ∉ p` with `ab ∈ p`.
pub fn completely_prime_witness(scope: &Scope<'_>, p: &Subset) -> Result<Option<(usize, usize)>> {
    require_proper(scope, p, Side::TwoSided)?;
    let t = scope.ring();
    Ok(outside(scope, p)
        .flat_map(|a| outside(scope, p).map(move |b| (a, b)))
        .find(|&(a, b)| p.contains(t.mul(a, b))))
}

pub fn is_completely_prime_ideal(scope: &Scope<'_>, p: &Subset) -> Result<bool> {
    Ok(completely_prime_witness(scope, p)?.is_none())
}

/// Some `a, b ∉ p` with `aP ⊆ P` and `ab ∈ P`, for a proper right ideal `p`.
pub fn completely_prime_right_witness(scope: &Scope<'_>, p: &Subset) -> Result<Option<(usize, usize)>> {
    require_proper(scope, p, Side::Right)?;
    let t = scope.ring();
    let members = p.to_vec();
    Ok(outside(scope, p)
        .filter(|&a| members.iter().all(|&x| p.contains(t.mul(a, x))))
        .flat_map(|a| outside(scope, p).map(move |b| (a, b)))
        .find(|&(a, b)| p.contains(t.mul(a, b))))
}

pub fn is_completely_prime_right_ideal(scope: &Scope<'_>, p: &Subset) -> Result<bool> {
    Ok(completely_prime_right_witness(scope, p)?.is_none())
}

/// Counterexample to primality of a proper one-sided ideal on `side`.
pub fn prime_one_sided_witness(scope: &Scope<'_>, p: &Subset, side: Side) -> Result<Option<(usize, usize)>> {
    require_proper(scope, p, side)?;
    Ok(sandwich_witness(scope, p))
}

pub fn is_prime_one_sided_ideal(scope: &Scope<'_>, p: &Subset, side: Side) -> Result<bool> {
    Ok(prime_one_sided_witness(scope, p, side)?.is_none())
}

/// Dispatches to the test for `kind`; the witness lists the offending elements.
///
/// One-sided primality accepts `p` if it is a left or a right ideal.
pub fn primality_witness(scope: &Scope<'_>, p: &Subset, kind: PrimalityKind) -> Result<Option<Vec<usize>>> {
    let pair = |w: Option<(usize, usize)>| w.map(|(a, b)| vec![a, b]);
    Ok(match kind {
        PrimalityKind::Prime => pair(prime_witness(scope, p)?),
        PrimalityKind::Semiprime => semiprime_witness(scope, p)?.map(|a| vec![a]),
        PrimalityKind::CompletelyPrime => pair(completely_prime_witness(scope, p)?),
        PrimalityKind::CompletelyPrimeRight => pair(completely_prime_right_witness(scope, p)?),
        PrimalityKind::PrimeOneSided => {
            let side = if is_ideal(scope, p, Side::Left) { Side::Left } else { Side::Right };
            pair(prime_one_sided_witness(scope, p, side)?)
        }
    })
}

/// Every prime two-sided ideal of `scope`.
pub fn prime_ideals(scope: &Scope<'_>, caps: &Caps) -> Result<Vec<Subset>> {
    let ideals = enumerate_ideals(scope, Side::TwoSided, caps)?;
    Ok(ideals
        .into_iter()
        .filter(|p| p != scope.set() && sandwich_witness(scope, p).is_none())
        .collect())
}

/// Inclusion-minimal primes of `scope` containing `i`.
pub fn minimal_primes_over(scope: &Scope<'_>, i: &Subset, caps: &Caps) -> Result<Vec<Subset>> {
    let over: Vec<Subset> = prime_ideals(scope, caps)?
        .into_iter()
        .filter(|p| i.is_subset(p))
        .collect();
    Ok(over
        .iter()
        .filter(|p| !over.iter().any(|q| q.is_proper_subset(p)))
        .cloned()
        .collect())
}

/// Intersection of all primes containing `i` (the whole scope if there are none).
pub fn prime_radical(scope: &Scope<'_>, i: &Subset, caps: &Caps) -> Result<Subset> {
    Ok(minimal_primes_over(scope, i, caps)?
        .iter()
        .fold(scope.set().clone(), |acc, p| acc.intersection(p)))
}

/// Smallest `k` with `I^k = 0`, or `None` if the powers stabilise above zero.
pub fn nilpotency_index(t: &RingTable, i: &Subset) -> Option<usize> {
    let zero = t.zero_set();
    let mut power = i.clone();
    let mut k = 1;
    loop {
        if power == zero {
            return Some(k);
        }
        let next = product_span(t, &power, i);
        if next == power {
            return None;
        }
        power = next;
        k += 1;
    }
}

pub fn is_nilpotent_ideal(t: &RingTable, i: &Subset) -> bool {
    nilpotency_index(t, i).is_some()
}

/// Least `k ≥ 1` with `k·1 ∈ I`: the characteristic of `S/I`.
pub fn quotient_characteristic(t: &RingTable, i: &Subset) -> usize {
    let mut x = t.one();
    let mut k = 1;
    while !i.contains(x) {
        x = t.add(x, t.one());
        k += 1;
    }
    k
}

/// Whether every `a ∈ S \ P` has a right inverse modulo the two-sided ideal `P`.
pub fn is_division_quotient(scope: &Scope<'_>, p: &Subset) -> Result<bool> {
    require_proper(scope, p, Side::TwoSided)?;
    let t = scope.ring();
    Ok(outside(scope, p).all(|a| {
        scope
            .elements()
            .iter()
            .any(|&b| p.contains(t.sub(t.mul(a, b), t.one())))
    }))
}

fn integral_coefficients(pair: &ExtensionPair, x: usize, n: usize, side: Side) -> Option<Vec<usize>> {
    assert!(n >= 1, "degree must be positive");
    let t = pair.t();
    let r = pair.r_scope();
    let coeffs = r.elements();
    let powers: Vec<usize> = (0..=n).map(|k| t.pow(x, k)).collect();
    let mut idx = vec![0usize; n - 1];
    loop {
        // x^n + Σ x^{n-k} c_k for right, c_k x^{n-k} for left, k < n
        let mut sum = powers[n];
        for (k, &ci) in idx.iter().enumerate() {
            let c = coeffs[ci];
            let p = powers[n - 1 - k];
            sum = t.add(sum, if side == Side::Left { t.mul(c, p) } else { t.mul(p, c) });
        }
        let last = t.neg(sum);
        if pair.r().contains(last) {
            let mut out: Vec<usize> = idx.iter().map(|&ci| coeffs[ci]).collect();
            out.push(last);
            return Some(out);
        }
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < coeffs.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Coefficients `c_1..c_n ∈ R` with `x^n + x^{n-1}c_1 + … + x c_{n-1} + c_n = 0`.
pub fn right_integral_witness(pair: &ExtensionPair, x: usize, n: usize) -> Option<Vec<usize>> {
    integral_coefficients(pair, x, n, Side::Right)
}

/// Coefficients `c_1..c_n ∈ R` with `x^n + c_1x^{n-1} + … + c_{n-1}x + c_n = 0`.
pub fn left_integral_witness(pair: &ExtensionPair, x: usize, n: usize) -> Option<Vec<usize>> {
    integral_coefficients(pair, x, n, Side::Left)
}

pub fn is_right_n_integral(pair: &ExtensionPair, x: usize, n: usize) -> bool {
    right_integral_witness(pair, x, n).is_some()
}

pub fn is_left_n_integral(pair: &ExtensionPair, x: usize, n: usize) -> bool {
    left_integral_witness(pair, x, n).is_some()
}

/// First element outside `R` that is left or right `n`-integral.
pub fn integral_outside(pair: &ExtensionPair, n: usize) -> Option<usize> {
    pair.t()
        .elements()
        .filter(|&x| !pair.r().contains(x))
        .find(|&x| is_right_n_integral(pair, x, n) || is_left_n_integral(pair, x, n))
}

pub fn is_n_integrally_closed(pair: &ExtensionPair, n: usize) -> bool {
    integral_outside(pair, n).is_none()
}

/// First `x ∉ R` with `x² ∈ R`.
pub fn square_outside(pair: &ExtensionPair) -> Option<usize> {
    let t = pair.t();
    t.elements()
        .find(|&x| !pair.r().contains(x) && pair.r().contains(t.mul(x, x)))
}

pub fn is_square_closed(pair: &ExtensionPair) -> bool {
    square_outside(pair).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, matrix, product, triangular, Shape};
    use crate::substructures::{jacobson_radical, maximal_ideals};

    fn caps() -> Caps {
        Caps::default()
    }

    fn m2f2() -> Arc<RingTable> {
        Arc::new(matrix(&cyclic(2).unwrap(), 2, &caps()).unwrap())
    }

    /// Lower triangular matrices inside `M_2(F_2)`.
    fn lower_pair() -> ExtensionPair {
        let t = m2f2();
        let r = t.subset_where(|x| t.name(x).starts_with("[[0,0]") || t.name(x).starts_with("[[1,0]"));
        ExtensionPair::new(t, r).unwrap()
    }

    fn diagonal_pair() -> ExtensionPair {
        let f2 = cyclic(2).unwrap();
        let t = Arc::new(product(&[f2.clone(), f2], &caps()).unwrap());
        let r = t.subset_by_names(["(0,0)", "(1,1)"]).unwrap();
        ExtensionPair::new(t, r).unwrap()
    }

    #[test]
    fn lower_triangular_conductors() {
        let p = lower_pair();
        let t = p.t();
        assert!(p.is_maximal());
        assert_eq!(
            t.render(p.cond_l()),
            "{[[0,0],[0,0]], [[0,0],[1,0]], [[1,0],[0,0]], [[1,0],[1,0]]}"
        );
        assert_eq!(
            t.render(p.cond_r()),
            "{[[0,0],[0,0]], [[0,0],[0,1]], [[0,0],[1,0]], [[0,0],[1,1]]}"
        );
        assert_eq!(p.cond_l().intersection(p.cond_r()).count(), 2);
        assert_eq!(p.cond(), &t.zero_set());
        assert!(!p.cond_l().comparable(p.cond_r()));
    }

    #[test]
    fn conductor_chain_holds() {
        for p in [lower_pair(), diagonal_pair()] {
            let t = p.t();
            let lr = product_span(t, p.cond_l(), p.cond_r());
            assert!(lr.is_subset(p.cond()));
            assert!(p.cond().is_subset(&p.cond_l().intersection(p.cond_r())));
        }
    }

    #[test]
    fn pair_validation() {
        let t = m2f2();
        assert!(matches!(ExtensionPair::new(t.clone(), t.full_set()), Err(Error::NotProperSubring)));
        assert!(matches!(ExtensionPair::new(t.clone(), t.zero_set()), Err(Error::NotSubring)));
    }

    #[test]
    fn zero_prime_in_t_not_in_r() {
        let p = lower_pair();
        assert!(is_prime_ideal(&p.t_scope(), p.cond()).unwrap());
        let r = p.r_scope();
        assert!(!is_prime_ideal(&r, p.cond()).unwrap());
        assert!(is_prime_ideal(&r, p.cond_l()).unwrap());
        assert!(is_prime_ideal(&r, p.cond_r()).unwrap());
        assert!(!is_semiprime_ideal(&r, p.cond()).unwrap());
        let t = p.t();
        let w = semiprime_witness(&r, p.cond()).unwrap().unwrap();
        assert_eq!(t.name(w), "[[0,0],[1,0]]");
    }

    #[test]
    fn primality_argument_validation() {
        let p = lower_pair();
        let t = p.t();
        let ts = p.t_scope();
        assert_eq!(is_prime_ideal(&ts, &t.full_set()), Err(Error::ImproperIdeal));
        assert_eq!(is_prime_ideal(&ts, p.cond_l()), Err(Error::NotIdeal(Side::TwoSided)));
    }

    #[test]
    fn completely_prime_cases() {
        let f2 = cyclic(2).unwrap();
        assert!(is_completely_prime_ideal(&Scope::whole(&f2), &f2.zero_set()).unwrap());
        let t = m2f2();
        let ts = Scope::whole(&t);
        assert!(!is_completely_prime_ideal(&ts, &t.zero_set()).unwrap());
        for m in maximal_ideals(&ts, Side::Right, &caps()).unwrap() {
            assert!(is_completely_prime_right_ideal(&ts, &m).unwrap());
        }
        let d = diagonal_pair();
        assert!(is_completely_prime_ideal(&d.r_scope(), d.cond()).unwrap());
    }

    #[test]
    fn one_sided_primes() {
        let t = m2f2();
        let ts = Scope::whole(&t);
        for m in maximal_ideals(&ts, Side::Left, &caps()).unwrap() {
            assert!(is_prime_one_sided_ideal(&ts, &m, Side::Left).unwrap());
            assert!(primality_witness(&ts, &m, PrimalityKind::PrimeOneSided).unwrap().is_none());
        }
        let lo = triangular(&cyclic(2).unwrap(), 2, Shape::Lower, &caps()).unwrap();
        let ls = Scope::whole(&lo);
        assert!(!is_prime_one_sided_ideal(&ls, &lo.zero_set(), Side::Left).unwrap());
        let z4 = cyclic(4).unwrap();
        let zs = Scope::whole(&z4);
        assert!(is_prime_one_sided_ideal(&zs, &z4.subset([0, 2]), Side::Right).unwrap());
    }

    #[test]
    fn minimal_primes_and_radical() {
        let p = lower_pair();
        let r = p.r_scope();
        let mut expected = vec![p.cond_l().clone(), p.cond_r().clone()];
        expected.sort();
        let mut got = minimal_primes_over(&r, p.cond(), &caps()).unwrap();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(
            prime_radical(&r, p.cond(), &caps()).unwrap(),
            p.cond_l().intersection(p.cond_r())
        );
        let f2 = cyclic(2).unwrap();
        let fs = Scope::whole(&f2);
        assert_eq!(minimal_primes_over(&fs, &f2.zero_set(), &caps()).unwrap(), vec![f2.zero_set()]);
    }

    #[test]
    fn nilpotency() {
        let lo = triangular(&cyclic(2).unwrap(), 2, Shape::Lower, &caps()).unwrap();
        let j = jacobson_radical(&Scope::whole(&lo), &caps()).unwrap();
        assert_eq!(nilpotency_index(&lo, &j), Some(2));
        assert_eq!(nilpotency_index(&lo, &lo.zero_set()), Some(1));
        let d = diagonal_pair();
        let e = d.t().subset_by_names(["(0,0)", "(1,0)"]).unwrap();
        assert!(!is_nilpotent_ideal(d.t(), &e));
    }

    #[test]
    fn integrality() {
        let d = diagonal_pair();
        let t = d.t();
        let x = t.find("(1,0)").unwrap();
        assert!(is_right_n_integral(&d, x, 2));
        assert!(!is_right_n_integral(&d, x, 1));
        for y in d.r().iter() {
            assert!(is_right_n_integral(&d, y, 1) && is_left_n_integral(&d, y, 1));
        }
        assert!(is_square_closed(&d));
        assert!(!is_n_integrally_closed(&d, 2));
        let p = lower_pair();
        assert!(!is_square_closed(&p));
    }

    #[test]
    fn quotient_characteristics() {
        let z4 = cyclic(4).unwrap();
        assert_eq!(quotient_characteristic(&z4, &z4.zero_set()), 4);
        assert_eq!(quotient_characteristic(&z4, &z4.subset([0, 2])), 2);
    }

    #[test]
    fn division_quotients() {
        let p = lower_pair();
        let r = p.r_scope();
        assert!(is_division_quotient(&r, p.cond_l()).unwrap());
        let z4 = cyclic(4).unwrap();
        assert!(!is_division_quotient(&Scope::whole(&z4), &z4.zero_set()).unwrap());
    }
}
