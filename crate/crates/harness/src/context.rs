use std::sync::{Arc, OnceLock};

use conductor_core::ideal::{prime_ideals, prime_radical, ExtensionPair};
use conductor_core::substructures::{enumerate_ideals, jacobson_radical, maximal_ideals, Scope, Side};
use conductor_core::{Caps, Error, Result, RingTable, Subset};

type Cached = OnceLock<Result<Vec<Subset>>>;

/// A corpus pair with its caps and lazily computed lattices shared by the checks.
#[derive(Debug)]
pub struct PairContext {
    pub label: String,
    pub pair: ExtensionPair,
    pub caps: Caps,
    r_ideals: Cached,
    t_ideals: Cached,
    r_primes: Cached,
    t_primes: Cached,
    r_max: [Cached; 3],
    t_max: [Cached; 3],
    r_radicals: OnceLock<Result<(Subset, Subset)>>,
}

fn slot(side: Side) -> usize {
    match side {
        Side::Left => 0,
        Side::Right => 1,
        Side::TwoSided => 2,
    }
}

fn get<'a>(cell: &'a Cached, f: impl FnOnce() -> Result<Vec<Subset>>) -> Result<&'a [Subset]> {
    cell.get_or_init(f).as_deref().map_err(Error::clone)
}

impl PairContext {
    pub fn new(label: impl Into<String>, pair: ExtensionPair, caps: Caps) -> Self {
        PairContext {
            label: label.into(),
            pair,
            caps,
            r_ideals: OnceLock::new(),
            t_ideals: OnceLock::new(),
            r_primes: OnceLock::new(),
            t_primes: OnceLock::new(),
            r_max: Default::default(),
            t_max: Default::default(),
            r_radicals: OnceLock::new(),
        }
    }

    pub fn t(&self) -> &RingTable {
        self.pair.t()
    }

    pub fn t_arc(&self) -> &Arc<RingTable> {
        self.pair.t_arc()
    }

    pub fn r(&self) -> &Subset {
        self.pair.r()
    }

    pub fn r_scope(&self) -> Scope<'_> {
        self.pair.r_scope()
    }

    pub fn t_scope(&self) -> Scope<'_> {
        self.pair.t_scope()
    }

    pub fn cond(&self) -> &Subset {
        self.pair.cond()
    }

    pub fn cond_l(&self) -> &Subset {
        self.pair.cond_l()
    }

    pub fn cond_r(&self) -> &Subset {
        self.pair.cond_r()
    }

    /// Two-sided ideals of `R`.
    pub fn r_ideals(&self) -> Result<&[Subset]> {
        get(&self.r_ideals, || enumerate_ideals(&self.r_scope(), Side::TwoSided, &self.caps))
    }

    /// Two-sided ideals of `T`.
    pub fn t_ideals(&self) -> Result<&[Subset]> {
        get(&self.t_ideals, || enumerate_ideals(&self.t_scope(), Side::TwoSided, &self.caps))
    }

    pub fn r_primes(&self) -> Result<&[Subset]> {
        get(&self.r_primes, || prime_ideals(&self.r_scope(), &self.caps))
    }

    pub fn t_primes(&self) -> Result<&[Subset]> {
        get(&self.t_primes, || prime_ideals(&self.t_scope(), &self.caps))
    }

    /// Maximal ideals of `R` of the given sidedness.
    pub fn r_max(&self, side: Side) -> Result<&[Subset]> {
        get(&self.r_max[slot(side)], || maximal_ideals(&self.r_scope(), side, &self.caps))
    }

    pub fn t_max(&self, side: Side) -> Result<&[Subset]> {
        get(&self.t_max[slot(side)], || maximal_ideals(&self.t_scope(), side, &self.caps))
    }

    /// `J(R)` and the prime radical of `R`.
    pub fn r_radicals(&self) -> Result<(&Subset, &Subset)> {
        let cell = self.r_radicals.get_or_init(|| {
            let r = self.r_scope();
            let zero = self.t().zero_set();
            Ok((jacobson_radical(&r, &self.caps)?, prime_radical(&r, &zero, &self.caps)?))
        });
        match cell {
            Ok((j, n)) => Ok((j, n)),
            Err(e) => Err(e.clone()),
        }
    }

    /// Minimal primes of `R` over `i`, from the cached prime list.
    pub fn r_min_over(&self, i: &Subset) -> Result<Vec<Subset>> {
        Ok(minimal_among(self.r_primes()?, i))
    }

    pub fn t_min_over(&self, i: &Subset) -> Result<Vec<Subset>> {
        Ok(minimal_among(self.t_primes()?, i))
    }
}

fn minimal_among(primes: &[Subset], i: &Subset) -> Vec<Subset> {
    let over: Vec<&Subset> = primes.iter().filter(|p| i.is_subset(p)).collect();
    over.iter()
        .filter(|p| !over.iter().any(|q| q.is_proper_subset(p)))
        .map(|p| (*p).clone())
        .collect()
}
