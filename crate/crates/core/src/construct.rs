//! Ring constructors: residues, matrices, triangular matrices, products,
//! opposites and quotients.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Caps, RingTable};
use crate::subset::Subset;
use crate::substructures::{is_ideal, Scope, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Lower,
    Upper,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Lower => "lower",
            Shape::Upper => "upper",
        })
    }
}

/// `Z/n` with residues `0..n` as elements.
pub fn cyclic(n: usize) -> Result<RingTable> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    let names = (0..n).map(|i| i.to_string()).collect();
    Ok(RingTable::from_flat(format!("Z({n})"), n, add, mul, 0, 1, names))
}

/// Mixed-radix codec for tuples of base-ring elements; position 0 is the most
/// significant digit, so index order is lexicographic in the entries.
struct Digits {
    radix: usize,
    width: usize,
}

impl Digits {
    fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.width];
        for slot in out.iter_mut().rev() {
            *slot = idx % self.radix;
            idx /= self.radix;
        }
        out
    }

    fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.radix + d)
    }
}

fn checked_order(base: usize, width: usize, cap: usize) -> Result<usize> {
    match base.checked_pow(width as u32) {
        Some(n) if n <= cap => Ok(n),
        Some(n) => Err(Error::CapExceeded { what: "construction", size: n, cap }),
        None => Err(Error::CapExceeded { what: "construction", size: usize::MAX, cap }),
    }
}

/// Ring of matrices over `base` supported on the given coordinate positions
/// (all positions for the full matrix ring, a triangle for triangular rings).
fn matrix_like(
    base: &RingTable,
    k: usize,
    positions: &[(usize, usize)],
    label: String,
    cap: usize,
) -> Result<RingTable> {
    let digits = Digits { radix: base.order(), width: positions.len() };
    let order = checked_order(base.order(), positions.len(), cap)?;
    let slot = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    let full = |d: &[usize]| -> Vec<Vec<usize>> {
        let mut m = vec![vec![base.zero(); k]; k];
        for (p, &(i, j)) in positions.iter().enumerate() {
            m[i][j] = d[p];
        }
        m
    };
    let decoded: Vec<Vec<usize>> = (0..order).map(|x| digits.decode(x)).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in &decoded {
        let ma = full(a);
        for b in &decoded {
            let sum: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| base.add(x, y)).collect();
            add.push(digits.encode(&sum));
            let mb = full(b);
            let mut prod = vec![base.zero(); positions.len()];
            for i in 0..k {
                for j in 0..k {
                    let v = (0..k).fold(base.zero(), |acc, l| {
                        base.add(acc, base.mul(ma[i][l], mb[l][j]))
                    });
                    match slot(i, j) {
                        Some(p) => prod[p] = v,
                        None => debug_assert_eq!(v, base.zero(), "product left the support"),
                    }
                }
            }
            mul.push(digits.encode(&prod));
        }
    }
    let id_digits: Vec<usize> = positions
        .iter()
        .map(|&(i, j)| if i == j { base.one() } else { base.zero() })
        .collect();
    let names = decoded
        .iter()
        .map(|d| {
            let rows: Vec<String> = full(d)
                .iter()
                .map(|r| {
                    let cells: Vec<&str> = r.iter().map(|&x| base.name(x)).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    Ok(RingTable::from_flat(
        label,
        order,
        add,
        mul,
        0,
        digits.encode(&id_digits),
        names,
    ))
}

/// The full matrix ring `M_k(base)`.
pub fn matrix(base: &RingTable, k: usize, caps: &Caps) -> Result<RingTable> {
    if k == 0 {
        return Err(Error::InvalidDimension(k));
    }
    let positions: Vec<(usize, usize)> =
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    matrix_like(base, k, &positions, format!("Mat({},{k})", base.label()), caps.construction)
}

/// Lower or upper triangular `k×k` matrices over `base`.
pub fn triangular(base: &RingTable, k: usize, shape: Shape, caps: &Caps) -> Result<RingTable> {
    if k < 2 {
        return Err(Error::InvalidDimension(k));
    }
    let positions: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| match shape {
            Shape::Lower => j <= i,
            Shape::Upper => j >= i,
        })
        .collect();
    matrix_like(
        base,
        k,
        &positions,
        format!("Tri({},{k},{shape})", base.label()),
        caps.construction,
    )
}

/// Direct product with componentwise operations.
pub fn product(factors: &[RingTable], caps: &Caps) -> Result<RingTable> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let order = factors.iter().try_fold(1usize, |acc, f| {
        acc.checked_mul(f.order())
            .filter(|&n| n <= caps.construction)
            .ok_or(Error::CapExceeded {
                what: "construction",
                size: acc.saturating_mul(f.order()),
                cap: caps.construction,
            })
    })?;
    let decode = |mut x: usize| -> Vec<usize> {
        let mut out = vec![0; factors.len()];
        for (slot, f) in out.iter_mut().zip(factors).rev() {
            *slot = x % f.order();
            x /= f.order();
        }
        out
    };
    let encode = |c: &[usize]| c.iter().zip(factors).fold(0, |acc, (&d, f)| acc * f.order() + d);
    let decoded: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in &decoded {
        for b in &decoded {
            let s: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.add(a[i], b[i])).collect();
            let p: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.mul(a[i], b[i])).collect();
            add.push(encode(&s));
            mul.push(encode(&p));
        }
    }
    let zero = encode(&factors.iter().map(RingTable::zero).collect::<Vec<_>>());
    let one = encode(&factors.iter().map(RingTable::one).collect::<Vec<_>>());
    let names = decoded
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().zip(factors).map(|(&x, f)| f.name(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let labels: Vec<&str> = factors.iter().map(RingTable::label).collect();
    Ok(RingTable::from_flat(
        format!("Prod({})", labels.join(",")),
        order,
        add,
        mul,
        zero,
        one,
        names,
    ))
}

/// Same elements and addition, multiplication reversed.
pub fn opposite(t: &RingTable) -> RingTable {
    let n = t.order();
    let add = t.add_table().into_iter().flatten().collect();
    let mul = (0..n * n).map(|i| t.mul(i % n, i / n)).collect();
    RingTable::from_flat(
        format!("Op({})", t.label()),
        n,
        add,
        mul,
        t.zero(),
        t.one(),
        t.names().to_vec(),
    )
}

/// Quotient of a subring scope by one of its two-sided ideals.
///
/// Cosets are indexed in order of their smallest member. The projection maps
/// every scope element to its coset index and is `None` outside the scope.
pub fn quotient_in(scope: &Scope<'_>, ideal: &Subset) -> Result<(RingTable, Vec<Option<usize>>)> {
    let t = scope.ring();
    t.owns(ideal)?;
    if !is_ideal(scope, ideal, Side::TwoSided) {
        return Err(Error::NotIdeal(Side::TwoSided));
    }
    if ideal == scope.set() {
        return Err(Error::ImproperIdeal);
    }
    let mut projection = vec![None; t.order()];
    let mut reps = Vec::new();
    let members = ideal.to_vec();
    for &x in scope.elements() {
        if projection[x].is_some() {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &i in &members {
            projection[t.add(x, i)] = Some(c);
        }
    }
    let m = reps.len();
    let class = |x: usize| projection[x].expect("closed under scope operations");
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(class(t.add(a, b)));
            mul.push(class(t.mul(a, b)));
        }
    }
    // coset products must not depend on representatives
    for &a in scope.elements() {
        for &b in scope.elements() {
            let (ca, cb) = (class(a), class(b));
            if mul[ca * m + cb] != class(t.mul(a, b)) || add[ca * m + cb] != class(t.add(a, b)) {
                return Err(Error::NotIdeal(Side::TwoSided));
            }
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", t.name(r))).collect();
    let q = RingTable::from_flat(
        format!("{}/I", t.label()),
        m,
        add,
        mul,
        class(t.zero()),
        class(t.one()),
        names,
    );
    Ok((q, projection))
}

/// `T/I` for a proper two-sided ideal `I` of `T`, with the projection map.
pub fn quotient(t: &RingTable, ideal: &Subset) -> Result<(RingTable, Vec<usize>)> {
    let (q, proj) = quotient_in(&Scope::whole(t), ideal)?;
    Ok((q, proj.into_iter().map(|c| c.expect("whole ring")).collect()))
}

/// A subring as a standalone ring, with the embedding of its elements.
pub fn restrict(scope: &Scope<'_>) -> RingTable {
    let t = scope.ring();
    let elems = scope.elements();
    let local = |x: usize| elems.binary_search(&x).expect("scope closed");
    let n = elems.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in elems {
        for &b in elems {
            add.push(local(t.add(a, b)));
            mul.push(local(t.mul(a, b)));
        }
    }
    let names = elems.iter().map(|&x| t.name(x).to_string()).collect();
    RingTable::from_flat(
        format!("{}|sub", t.label()),
        n,
        add,
        mul,
        local(t.zero()),
        local(t.one()),
        names,
    )
}
