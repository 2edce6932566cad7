//! Quotient modules `T/S` over a subring, their submodules and endomorphism rings.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::ExtensionPair;
use crate::ring::{Caps, RingTable};
use crate::subset::Subset;
use crate::substructures::{core_of, idealizer, is_additive_subgroup, jacobson_radical, maximal_ideals, Scope, Side};

/// `T/S` for an additive subgroup `S`, acted on by a subring from one side.
///
/// Cosets are numbered in order of their smallest member, which is also the
/// chosen representative.
#[derive(Clone, Debug)]
pub struct ModuleView<'r> {
    sub: Subset,
    coset_of: Vec<usize>,
    reps: Vec<usize>,
    actor: Scope<'r>,
    side: Side,
}

impl<'r> ModuleView<'r> {
    /// Builds the module and verifies the action is independent of representatives.
    ///
    /// # Panics
    /// If `side` is [`Side::TwoSided`].
    pub fn new(sub: Subset, actor: Scope<'r>, side: Side) -> Result<Self> {
        assert!(side != Side::TwoSided, "a module is acted on from one side");
        let t = actor.ring();
        t.owns(&sub)?;
        if !is_additive_subgroup(t, &sub) {
            return Err(Error::NotSubgroup);
        }
        let members = sub.to_vec();
        let mut coset_of = vec![usize::MAX; t.order()];
        let mut reps = Vec::new();
        for x in t.elements() {
            if coset_of[x] == usize::MAX {
                for &s in &members {
                    coset_of[t.add(x, s)] = reps.len();
                }
                reps.push(x);
            }
        }
        let view = ModuleView { sub, coset_of, reps, actor, side };
        for x in t.elements() {
            for &a in view.actor.elements() {
                if view.coset_of[view.raw_act(x, a)] != view.act(view.coset_of[x], a) {
                    return Err(Error::IllDefinedAction {
                        coset: view.coset_of[x],
                        actor: a,
                    });
                }
            }
        }
        Ok(view)
    }

    fn raw_act(&self, x: usize, a: usize) -> usize {
        let t = self.ring();
        match self.side {
            Side::Left => t.mul(a, x),
            _ => t.mul(x, a),
        }
    }

    pub fn ring(&self) -> &'r RingTable {
        self.actor.ring()
    }

    pub fn sub(&self) -> &Subset {
        &self.sub
    }

    pub fn actor(&self) -> &Scope<'r> {
        &self.actor
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Number of cosets.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.reps.len() == 1
    }

    pub fn zero(&self) -> usize {
        self.coset_of[self.ring().zero()]
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn add(&self, c: usize, d: usize) -> usize {
        self.coset_of[self.ring().add(self.reps[c], self.reps[d])]
    }

    /// The coset `c` acted on by the ring element `a` from the module's side.
    pub fn act(&self, c: usize, a: usize) -> usize {
        self.coset_of[self.raw_act(self.reps[c], a)]
    }

    /// Ring elements lying in the given set of cosets.
    pub fn preimage(&self, cosets: &BitSet) -> Subset {
        let t = self.ring();
        t.subset_where(|x| cosets.contains(self.coset_of[x]))
    }

    /// Smallest submodule containing the given cosets.
    pub fn submodule_closure(&self, gens: impl IntoIterator<Item = usize>) -> BitSet {
        let mut set = BitSet::new(self.len());
        let mut list = Vec::new();
        let mut queue = VecDeque::new();
        for c in std::iter::once(self.zero()).chain(gens) {
            if set.insert(c) {
                list.push(c);
                queue.push_back(c);
            }
        }
        while let Some(e) = queue.pop_front() {
            let mut next: Vec<usize> = list.iter().map(|&c| self.add(e, c)).collect();
            next.extend(self.actor.elements().iter().map(|&a| self.act(e, a)));
            for c in next {
                if set.insert(c) {
                    list.push(c);
                    queue.push_back(c);
                }
            }
        }
        set
    }

    fn sum(&self, a: &BitSet, b: &BitSet) -> BitSet {
        let bs = b.to_vec();
        BitSet::from_iter_len(self.len(), a.iter().flat_map(|x| bs.iter().map(move |&y| self.add(x, y))))
    }

    /// Every submodule, as sets of cosets, in canonical order.
    pub fn submodules(&self, caps: &Caps) -> Result<Vec<BitSet>> {
        Caps::check(self.len(), caps.module, "module")?;
        let cyclic: HashSet<BitSet> = (0..self.len()).map(|c| self.submodule_closure([c])).collect();
        let zero = self.submodule_closure([]);
        let mut seen = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(n) = queue.pop_front() {
            for c in &cyclic {
                if c.is_subset(&n) {
                    continue;
                }
                let j = self.sum(&n, c);
                if seen.insert(j.clone()) {
                    queue.push_back(j);
                }
            }
        }
        let mut out: Vec<BitSet> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    pub fn maximal_submodules(&self, caps: &Caps) -> Result<Vec<BitSet>> {
        let proper: Vec<BitSet> = self.submodules(caps)?.into_iter().filter(|s| !s.is_full()).collect();
        Ok(proper
            .iter()
            .filter(|s| !proper.iter().any(|o| o != *s && s.is_subset(o)))
            .cloned()
            .collect())
    }

    /// Nonzero with every nonzero coset generating the whole module.
    pub fn is_simple(&self) -> bool {
        !self.is_zero() && (0..self.len()).all(|c| c == self.zero() || self.submodule_closure([c]).is_full())
    }

    /// A coset whose orbit under the actor is the whole module.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.len()).find(|&c| {
            let orbit: HashSet<usize> = self.actor.elements().iter().map(|&a| self.act(c, a)).collect();
            orbit.len() == self.len()
        })
    }
}

/// Actor elements acting as zero on every coset.
pub fn module_annihilator(m: &ModuleView<'_>) -> Subset {
    let t = m.ring();
    let z = m.zero();
    t.subset(
        m.actor()
            .elements()
            .iter()
            .copied()
            .filter(|&a| (0..m.len()).all(|c| m.act(c, a) == z)),
    )
}

/// A maximal ideal on `side` whose core is `p`, certifying that `p` is
/// primitive on that side (the annihilator of a simple module).
pub fn primitive_certificate(scope: &Scope<'_>, p: &Subset, side: Side, caps: &Caps) -> Result<Option<Subset>> {
    assert!(side != Side::TwoSided, "primitivity is one-sided");
    for m in maximal_ideals(scope, side, caps)? {
        if p.is_subset(&m) && core_of(scope, &m, side)? == *p {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

pub fn is_right_primitive_ideal(scope: &Scope<'_>, p: &Subset, caps: &Caps) -> Result<bool> {
    Ok(primitive_certificate(scope, p, Side::Right, caps)?.is_some())
}

pub fn is_left_primitive_ideal(scope: &Scope<'_>, p: &Subset, caps: &Caps) -> Result<bool> {
    Ok(primitive_certificate(scope, p, Side::Left, caps)?.is_some())
}

/// Endomorphisms of a module as a ring under pointwise sum and composition.
///
/// Maps are written on the left: the product `fg` is `x ↦ f(g(x))`. Maps are
/// listed in lexicographic order of their image tables, so every
/// construction path yields the same ring.
#[derive(Clone, Debug)]
pub struct EndoRing {
    pub ring: RingTable,
    pub maps: Vec<Vec<usize>>,
}

impl EndoRing {
    fn assemble(m: &ModuleView<'_>, mut maps: Vec<Vec<usize>>) -> EndoRing {
        maps.sort();
        maps.dedup();
        let index: HashMap<&[usize], usize> = maps.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let n = maps.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for f in &maps {
            for g in &maps {
                let s: Vec<usize> = (0..m.len()).map(|c| m.add(f[c], g[c])).collect();
                let p: Vec<usize> = g.iter().map(|&c| f[c]).collect();
                add.push(index[s.as_slice()]);
                mul.push(index[p.as_slice()]);
            }
        }
        let zero_map = vec![m.zero(); m.len()];
        let id: Vec<usize> = (0..m.len()).collect();
        let names = maps
            .iter()
            .map(|f| format!("<{}>", f.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let ring = RingTable::from_flat(
            "End".to_string(),
            n,
            add,
            mul,
            index[zero_map.as_slice()],
            index[id.as_slice()],
            names,
        );
        EndoRing { ring, maps }
    }

    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.maps.binary_search_by(|f| f.as_slice().cmp(map)).ok()
    }
}

fn commutes_with_action(m: &ModuleView<'_>, f: &[usize]) -> bool {
    (0..m.len()).all(|c| m.actor().elements().iter().all(|&a| f[m.act(c, a)] == m.act(f[c], a)))
}

fn is_additive(m: &ModuleView<'_>, f: &[usize]) -> bool {
    (0..m.len()).all(|c| (0..m.len()).all(|d| f[m.add(c, d)] == m.add(f[c], f[d])))
}

fn endo_guard(m: &ModuleView<'_>, caps: &Caps) -> Result<()> {
    if m.is_zero() {
        return Err(Error::DegenerateModule);
    }
    Caps::check(m.len(), caps.endomorphism, "endomorphism")
}

/// Additive generators of the coset group, greedily.
fn additive_generators(m: &ModuleView<'_>) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = BitSet::from_iter_len(m.len(), [m.zero()]);
    while !span.is_full() {
        let c = span.complement().first().expect("not full");
        gens.push(c);
        let mut next = span.clone();
        loop {
            let grown = BitSet::from_iter_len(m.len(), next.iter().flat_map(|x| [x, m.add(x, c)]));
            if grown == next {
                break;
            }
            next = grown;
        }
        span = next;
    }
    gens
}

/// Extends generator images to an additive map, if consistent.
fn extend_additively(m: &ModuleView<'_>, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut f = vec![usize::MAX; m.len()];
    f[m.zero()] = m.zero();
    let mut known = vec![m.zero()];
    let mut work: Vec<(usize, usize)> = gens.iter().copied().zip(images.iter().copied()).collect();
    while let Some((x, y)) = work.pop() {
        if f[x] != usize::MAX {
            if f[x] != y {
                return None;
            }
            continue;
        }
        f[x] = y;
        known.push(x);
        for &k in &known {
            work.push((m.add(x, k), m.add(y, f[k])));
        }
    }
    Some(f)
}

/// All action-commuting additive self-maps, by images of additive generators.
pub fn endomorphism_ring(m: &ModuleView<'_>, caps: &Caps) -> Result<EndoRing> {
    endo_guard(m, caps)?;
    let gens = additive_generators(m);
    let mut maps = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(f) = extend_additively(m, &gens, &images) {
            if commutes_with_action(m, &f) {
                maps.push(f);
            }
        }
        let mut pos = images.len();
        loop {
            if pos == 0 {
                return Ok(EndoRing::assemble(m, maps));
            }
            pos -= 1;
            images[pos] += 1;
            if images[pos] < m.len() {
                break;
            }
            images[pos] = 0;
        }
    }
}

/// Same ring as [`endomorphism_ring`] for a cyclic module, enumerating only
/// the image of one generator. `None` if the module is not cyclic.
pub fn endomorphism_ring_cyclic(m: &ModuleView<'_>, caps: &Caps) -> Result<Option<EndoRing>> {
    endo_guard(m, caps)?;
    let Some(g) = m.cyclic_generator() else {
        return Ok(None);
    };
    let mut maps = Vec::new();
    'image: for y in 0..m.len() {
        let mut f = vec![usize::MAX; m.len()];
        for &a in m.actor().elements() {
            let (src, dst) = (m.act(g, a), m.act(y, a));
            if f[src] != usize::MAX && f[src] != dst {
                continue 'image;
            }
            f[src] = dst;
        }
        if is_additive(m, &f) && commutes_with_action(m, &f) {
            maps.push(f);
        }
    }
    Ok(Some(EndoRing::assemble(m, maps)))
}

/// How a candidate ring map into an endomorphism ring failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapFailure {
    /// The induced self-map of `element` depends on the representative `x`.
    IllDefined { element: usize, x: usize },
    /// The induced self-map of `element` is not an endomorphism.
    NotEndomorphism { element: usize },
    /// The zero pattern of the image disagrees with the kernel at `element`.
    Kernel { element: usize },
    NotAdditive { a: usize, b: usize },
    NotMultiplicative { a: usize, b: usize },
    NotUnital,
}

/// Outcome of replaying a ring map `domain/kernel → End(M)`.
#[derive(Clone, Debug)]
pub struct MapReplay {
    pub endo: EndoRing,
    /// Image index in `endo` of each domain element (`None` outside the domain).
    pub image: Vec<Option<usize>>,
    pub failure: Option<MapFailure>,
    pub surjective: bool,
}

impl MapReplay {
    /// Injective unital ring homomorphism.
    pub fn is_embedding(&self) -> bool {
        self.failure.is_none()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.failure.is_none() && self.surjective
    }

    /// Image of a set of domain elements as a subset of the endomorphism ring.
    pub fn image_of(&self, s: &Subset) -> Subset {
        self.endo.ring.subset(s.iter().filter_map(|x| self.image[x]))
    }
}

/// Replays `r ↦ (x + S ↦ op(r, x) + S)` for `r` in `domain`.
///
/// When `reversed`, multiplication is checked against the opposite of the
/// endomorphism ring (maps arising from right multiplication on a left module).
fn replay(
    m: &ModuleView<'_>,
    domain: &Scope<'_>,
    kernel: &Subset,
    reversed: bool,
    caps: &Caps,
    op: impl Fn(usize, usize) -> usize,
) -> Result<MapReplay> {
    let t = m.ring();
    let endo = endomorphism_ring(m, caps)?;
    let mut image = vec![None; t.order()];
    let mut failure = None;
    'outer: for &r in domain.elements() {
        let f: Vec<usize> = (0..m.len()).map(|c| m.coset_of(op(r, m.rep(c)))).collect();
        for x in t.elements() {
            if m.coset_of(op(r, x)) != f[m.coset_of(x)] {
                failure = Some(MapFailure::IllDefined { element: r, x });
                break 'outer;
            }
        }
        let Some(i) = endo.index_of(&f) else {
            failure = Some(MapFailure::NotEndomorphism { element: r });
            break;
        };
        if (i == endo.ring.zero()) != kernel.contains(r) {
            failure = Some(MapFailure::Kernel { element: r });
            break;
        }
        image[r] = Some(i);
    }
    let e = &endo.ring;
    if failure.is_none() {
        let img = |x: usize| image[x].expect("domain element mapped");
        failure = domain
            .elements()
            .iter()
            .flat_map(|&a| domain.elements().iter().map(move |&b| (a, b)))
            .find_map(|(a, b)| {
                let prod = if reversed { e.mul(img(b), img(a)) } else { e.mul(img(a), img(b)) };
                if img(t.add(a, b)) != e.add(img(a), img(b)) {
                    Some(MapFailure::NotAdditive { a, b })
                } else if img(t.mul(a, b)) != prod {
                    Some(MapFailure::NotMultiplicative { a, b })
                } else {
                    None
                }
            });
        if failure.is_none() && img(t.one()) != e.one() {
            failure = Some(MapFailure::NotUnital);
        }
    }
    let hit: HashSet<usize> = image.iter().flatten().copied().collect();
    let surjective = hit.len() == e.order();
    Ok(MapReplay { endo, image, failure, surjective })
}

/// `𝕀(A)/A → End(T/A)` by `r ↦ (x + A ↦ rx + A)` for a right ideal `A`;
/// for a left ideal, `x + A ↦ xr + A` into the opposite ring.
pub fn phi_isomorphism_check(t: &RingTable, a: &Subset, side: Side, caps: &Caps) -> Result<MapReplay> {
    assert!(side != Side::TwoSided, "pass the side A is an ideal on");
    let idz = idealizer(t, a, side)?;
    let domain = Scope::new(t, idz)?;
    let m = ModuleView::new(a.clone(), Scope::whole(t), side)?;
    match side {
        Side::Right => replay(&m, &domain, a, false, caps, |r, x| t.mul(r, x)),
        _ => replay(&m, &domain, a, true, caps, |r, x| t.mul(x, r)),
    }
}

/// `R/cond_r → End((T/R)_R)` by `r ↦ (x + R ↦ rx + R)` on the right;
/// on the left, `R/cond_l → End(_R(T/R))^op` by `x + R ↦ xr + R`.
pub fn psi_embedding_check(pair: &ExtensionPair, side: Side, caps: &Caps) -> Result<MapReplay> {
    assert!(side != Side::TwoSided, "pass the side of the module");
    let t = pair.t();
    let m = ModuleView::new(pair.r().clone(), pair.r_scope(), side)?;
    let domain = pair.r_scope();
    match side {
        Side::Right => replay(&m, &domain, pair.cond_r(), false, caps, |r, x| t.mul(r, x)),
        _ => replay(&m, &domain, pair.cond_l(), true, caps, |r, x| t.mul(x, r)),
    }
}

/// For `P = cond_r`: some `r ∈ R \ P`, `x ∈ T \ P` with `rx ∈ P`, i.e. a
/// torsion element of `T/P` as a left `R/P`-module.
pub fn torsion_witness(pair: &ExtensionPair) -> Option<(usize, usize)> {
    let t = pair.t();
    let p = pair.cond_r();
    let r = pair.r();
    r.iter()
        .filter(|&a| !p.contains(a))
        .flat_map(|a| t.elements().filter(|&x| !p.contains(x)).map(move |x| (a, x)))
        .find(|&(a, x)| p.contains(t.mul(a, x)))
}

pub fn is_torsionfree(pair: &ExtensionPair) -> bool {
    torsion_witness(pair).is_none()
}

/// Semisimplicity and isotypy of a module over its (finite) actor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Semisimplicity {
    /// `J(actor)` acts as zero.
    pub semisimple: bool,
    /// The annihilator is a maximal two-sided ideal of the actor.
    pub isotypic: bool,
}

pub fn semisimplicity(m: &ModuleView<'_>, caps: &Caps) -> Result<Semisimplicity> {
    let j = jacobson_radical(m.actor(), caps)?;
    let semisimple = (0..m.len()).all(|c| j.iter().all(|a| m.act(c, a) == m.zero()));
    let ann = module_annihilator(m);
    let isotypic = maximal_ideals(m.actor(), Side::TwoSided, caps)?.contains(&ann);
    Ok(Semisimplicity { semisimple, isotypic })
}

pub fn is_semisimple_isotypic(m: &ModuleView<'_>, caps: &Caps) -> Result<bool> {
    let s = semisimplicity(m, caps)?;
    Ok(s.semisimple && s.isotypic)
}
