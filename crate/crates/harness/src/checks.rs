//! The check registry: one executable predicate per conductor statement.
//!
//! A check has an optional hypothesis filter over the pair and a body. When
//! the filter rejects, the verdict is vacuous. Bodies that quantify over
//! elements report how many tuples met the element-level hypothesis.

use conductor_core::construct::{quotient, quotient_in};
use conductor_core::ideal::{
    completely_prime_right_witness, completely_prime_witness,
    is_completely_prime_right_ideal, is_division_quotient, is_left_n_integral, is_n_integrally_closed,
    is_nilpotent_ideal, is_prime_ideal, is_right_n_integral,
    is_square_closed, prime_one_sided_witness, prime_witness, quotient_characteristic, semiprime_witness,
    ExtensionPair,
};
use conductor_core::iso::find_isomorphism;
use conductor_core::module::{
    is_left_primitive_ideal, is_right_primitive_ideal, module_annihilator, phi_isomorphism_check,
    psi_embedding_check, semisimplicity, torsion_witness, ModuleView,
};
use conductor_core::ring::centralizer;
use conductor_core::substructures::{
    annihilator, idealizer, is_duo, is_ideal, is_maximal_subring, is_quasi_duo, product_span, subring_closure,
    sum_of, Scope, Side,
};
use conductor_core::{Error as CoreError, RingTable, Subset};

use crate::context::PairContext;

/// Result of running one check on one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// First counterexample in index order, as element indices of `T`.
    Fail { witness: Vec<usize> },
    Vacuous,
    /// A size cap or other computation limit stopped the check.
    Error { message: String },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::Error { .. } => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub detail: String,
}

/// Why a check body did not pass.
#[derive(Debug)]
pub enum Failure {
    Fail { reason: String, witness: Vec<usize> },
    Error(CoreError),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Error(e)
    }
}

type Body = fn(&PairContext) -> Result<String, Failure>;
type Filter = fn(&PairContext) -> Result<bool, CoreError>;

pub struct Check {
    pub id: &'static str,
    /// Plain-language summary of the statement checked.
    pub anchor: &'static str,
    pub filter: Option<Filter>,
    pub body: Body,
}

impl Check {
    pub fn evaluate(&self, ctx: &PairContext) -> Outcome {
        if let Some(filter) = self.filter {
            match filter(ctx) {
                Ok(true) => {}
                Ok(false) => {
                    return Outcome {
                        verdict: Verdict::Vacuous,
                        detail: String::new(),
                    }
                }
                Err(e) => {
                    return Outcome {
                        verdict: Verdict::Error { message: e.to_string() },
                        detail: String::new(),
                    }
                }
            }
        }
        match (self.body)(ctx) {
            Ok(detail) => Outcome { verdict: Verdict::Pass, detail },
            Err(Failure::Fail { reason, witness }) => Outcome {
                verdict: Verdict::Fail { witness },
                detail: reason,
            },
            Err(Failure::Error(e)) => Outcome {
                verdict: Verdict::Error { message: e.to_string() },
                detail: String::new(),
            },
        }
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).finish()
    }
}

pub fn find_check(id: &str) -> Option<&'static Check> {
    registry().iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

// ---- helpers ----

fn fail<T>(reason: impl Into<String>, witness: Vec<usize>) -> Result<T, Failure> {
    Err(Failure::Fail {
        reason: reason.into(),
        witness,
    })
}

fn ensure(ok: bool, reason: impl Into<String>, witness: Vec<usize>) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        fail(reason, witness)
    }
}

fn subset_of(a: &Subset, b: &Subset, what: &str) -> Result<(), Failure> {
    match a.iter().find(|&x| !b.contains(x)) {
        None => Ok(()),
        Some(x) => fail(format!("{what}: inclusion fails"), vec![x]),
    }
}

fn set_eq(a: &Subset, b: &Subset, what: &str) -> Result<(), Failure> {
    match a.first_difference(b) {
        None => Ok(()),
        Some(x) => fail(format!("{what}: sets differ"), vec![x]),
    }
}

fn pair_vec((a, b): (usize, usize)) -> Vec<usize> {
    vec![a, b]
}

/// First violation of the ideal laws: a failing difference `(x, y)` or product `(x, r)`.
pub fn ideal_violation(scope: &Scope<'_>, s: &Subset, side: Side) -> Option<Vec<usize>> {
    let t = scope.ring();
    if let Some(x) = s.iter().find(|&x| !scope.contains(x)) {
        return Some(vec![x]);
    }
    for x in s.iter() {
        if let Some(y) = s.iter().find(|&y| !s.contains(t.sub(x, y))) {
            return Some(vec![x, y]);
        }
    }
    for x in s.iter() {
        for &r in scope.elements() {
            let left = side != Side::Right && !s.contains(t.mul(r, x));
            let right = side != Side::Left && !s.contains(t.mul(x, r));
            if left || right {
                return Some(vec![x, r]);
            }
        }
    }
    None
}

fn ideal_in(scope: &Scope<'_>, s: &Subset, side: Side, what: &str) -> Result<(), Failure> {
    match ideal_violation(scope, s, side) {
        None => Ok(()),
        Some(w) => fail(format!("{what} is not a {side} ideal"), w),
    }
}

fn singleton(t: &RingTable, x: usize) -> Subset {
    t.subset([x])
}

/// `A·B·C` as an additive span.
fn span3(t: &RingTable, a: &Subset, b: &Subset, c: &Subset) -> Subset {
    product_span(t, &product_span(t, a, b), c)
}

fn is_zero_set(s: &Subset) -> bool {
    s.count() == 1
}

/// Smallest `n > 0` with `n·T ⊆ R`: the exponent of the additive group `T/R`.
pub fn quotient_exponent(pair: &ExtensionPair) -> usize {
    let t = pair.t();
    (1..)
        .find(|&n| t.elements().all(|x| pair.r().contains(t.times(n, x))))
        .expect("n = char(T) works")
}

fn is_prime_number(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `(a, b)` outside `p` with `a·T·b ⊆ p`.
fn sandwiches(t: &RingTable, p: &Subset) -> Vec<(usize, usize)> {
    let out: Vec<usize> = t.elements().filter(|&x| !p.contains(x)).collect();
    let mut found = Vec::new();
    for &a in &out {
        for &b in &out {
            if t.elements().all(|s| p.contains(t.mul(t.mul(a, s), b))) {
                found.push((a, b));
            }
        }
    }
    found
}

/// Which of the four conductor configurations hold (numbered 1 to 4).
pub fn conductor_cases(pair: &ExtensionPair) -> Result<Vec<u8>, CoreError> {
    let t = pair.t();
    let (c, cl, cr, r) = (pair.cond(), pair.cond_l(), pair.cond_r(), pair.r());
    let right_idz = idealizer(t, cr, Side::Right)?;
    let left_idz = idealizer(t, cl, Side::Left)?;
    let mut cases = Vec::new();
    if c == cl && cl.is_proper_subset(cr) && *r == right_idz {
        cases.push(1);
    }
    if c == cr && cr.is_proper_subset(cl) && *r == left_idz {
        cases.push(2);
    }
    if c.is_proper_subset(cl) && c.is_proper_subset(cr) && *r == right_idz && *r == left_idz {
        cases.push(3);
    }
    if c == cl && c == cr {
        cases.push(4);
    }
    Ok(cases)
}

// ---- bodies ----

fn c01(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let (c, cl, cr) = (ctx.cond(), ctx.cond_l(), ctx.cond_r());
    subset_of(&product_span(t, cl, cr), c, "cond_l·cond_r ⊆ cond")?;
    subset_of(c, &cl.intersection(cr), "cond ⊆ cond_l ∩ cond_r")?;
    let (rs, ts) = (ctx.r_scope(), ctx.t_scope());
    ideal_in(&rs, cl, Side::TwoSided, "cond_l in R")?;
    ideal_in(&rs, cr, Side::TwoSided, "cond_r in R")?;
    ideal_in(&rs, c, Side::TwoSided, "cond in R")?;
    ideal_in(&ts, c, Side::TwoSided, "cond in T")?;
    ideal_in(&ts, cl, Side::Left, "cond_l in T")?;
    ideal_in(&ts, cr, Side::Right, "cond_r in T")?;
    let sum = sum_of(t, cl, cr);
    ensure(!sum.is_full(), "cond_l + cond_r = T", vec![])?;
    Ok(format!("|cond|={} |cond_l|={} |cond_r|={}", c.count(), cl.count(), cr.count()))
}

fn c02(ctx: &PairContext) -> Result<String, Failure> {
    let rs = ctx.r_scope();
    for (name, p) in [("cond_l", ctx.cond_l()), ("cond_r", ctx.cond_r())] {
        if let Some(w) = prime_witness(&rs, p)? {
            return fail(format!("{name} is not prime in R"), pair_vec(w));
        }
    }
    Ok(String::new())
}

fn c03(ctx: &PairContext) -> Result<String, Failure> {
    let mins = ctx.r_min_over(ctx.cond())?;
    let rad = mins.iter().fold(ctx.r().clone(), |acc, p| acc.intersection(p));
    set_eq(&rad, &ctx.cond_l().intersection(ctx.cond_r()), "rad_R(cond) = cond_l ∩ cond_r")?;
    Ok(format!("{} minimal primes over cond", mins.len()))
}

fn c04(ctx: &PairContext) -> Result<String, Failure> {
    let (c, cl, cr) = (ctx.cond(), ctx.cond_l(), ctx.cond_r());
    let pw = prime_witness(&ctx.r_scope(), c)?;
    let equal = c == cl || c == cr;
    let comparable = cl.comparable(cr);
    if pw.is_none() != equal || equal != comparable {
        let witness = match pw {
            Some(w) => pair_vec(w),
            None => cl.first_difference(cr).into_iter().collect(),
        };
        return fail(
            format!("prime={} equal-to-one-side={equal} comparable={comparable}", pw.is_none()),
            witness,
        );
    }
    Ok(format!("prime={}", pw.is_none()))
}

fn c05(ctx: &PairContext) -> Result<String, Failure> {
    let (c, cl, cr) = (ctx.cond(), ctx.cond_l(), ctx.cond_r());
    let mins = ctx.r_min_over(c)?;
    ensure(mins.len() <= 2, format!("|Min_R(cond)| = {}", mins.len()), vec![])?;
    let comparable = cl.comparable(cr);
    ensure(
        (mins.len() == 1) == comparable,
        format!("|Min_R(cond)| = {} but comparable={comparable}", mins.len()),
        cl.first_difference(cr).into_iter().collect(),
    )?;
    if comparable {
        return Ok("|Min_R(cond)|=1".into());
    }
    ensure(
        mins.contains(cl) && mins.contains(cr),
        "Min_R(cond) ≠ {cond_l, cond_r}",
        vec![],
    )?;
    if is_prime_ideal(&ctx.t_scope(), c)? {
        return Ok("|Min_R(cond)|=2; cond prime in T".into());
    }
    let t = ctx.t();
    let t_mins = ctx.t_min_over(c)?;
    for (name, side_cond) in [("cond_l", cl), ("cond_r", cr)] {
        let (rq, _) = quotient_in(&ctx.r_scope(), side_cond)?;
        let mut matched = false;
        for q in t_mins.iter().filter(|q| q.intersection(ctx.r()) == *side_cond) {
            let (tq, _) = quotient(t, q)?;
            if find_isomorphism(&rq, &tq, &ctx.caps)?.is_some() {
                matched = true;
                break;
            }
        }
        ensure(matched, format!("no Q ∈ Min_T(cond) over {name} with matching quotient"), vec![])?;
    }
    Ok("|Min_R(cond)|=2; quotients matched in T".into())
}

fn c06(ctx: &PairContext) -> Result<String, Failure> {
    let w = semiprime_witness(&ctx.r_scope(), ctx.cond())?;
    let meet = ctx.cond_l().intersection(ctx.cond_r());
    let equal = *ctx.cond() == meet;
    if w.is_none() != equal {
        let witness = w.map(|x| vec![x]).unwrap_or_else(|| ctx.cond().first_difference(&meet).into_iter().collect());
        return fail(format!("semiprime={} but cond = cond_l ∩ cond_r is {equal}", w.is_none()), witness);
    }
    Ok(format!("semiprime={equal}"))
}

fn c07(ctx: &PairContext) -> Result<String, Failure> {
    let (c, cl, cr) = (ctx.cond(), ctx.cond_l(), ctx.cond_r());
    let views = [
        ("r.ann_T(T/cond_r)", cr, ctx.t_scope(), Side::Right),
        ("l.ann_T(T/cond_l)", cl, ctx.t_scope(), Side::Left),
        ("l.ann_R(T/cond_l)", cl, ctx.r_scope(), Side::Left),
        ("r.ann_R(T/cond_r)", cr, ctx.r_scope(), Side::Right),
    ];
    for (what, sub, actor, side) in views {
        let m = ModuleView::new(sub.clone(), actor, side)?;
        set_eq(&module_annihilator(&m), c, &format!("{what} = cond"))?;
    }
    let ts = ctx.t_scope();
    let mut notes = Vec::new();
    if ctx.t_max(Side::Left)?.contains(cl) {
        ensure(is_left_primitive_ideal(&ts, c, &ctx.caps)?, "cond not left primitive in T", vec![])?;
        notes.push("left primitive in T");
    }
    if ctx.t_max(Side::Right)?.contains(cr) {
        ensure(is_right_primitive_ideal(&ts, c, &ctx.caps)?, "cond not right primitive in T", vec![])?;
        notes.push("right primitive in T");
    }
    Ok(notes.join("; "))
}

fn f08(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(ctx.r_max(Side::TwoSided)?.contains(ctx.cond()))
}

fn c08(ctx: &PairContext) -> Result<String, Failure> {
    set_eq(ctx.cond(), ctx.cond_l(), "cond = cond_l")?;
    set_eq(ctx.cond(), ctx.cond_r(), "cond = cond_r")?;
    Ok(String::new())
}

fn c09(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let (j, nil) = ctx.r_radicals()?;
    let meet = ctx.cond_l().intersection(ctx.cond_r());
    let mut fired = 0;
    for (name, rad) in [("J(R)", j), ("Nil*(R)", nil)] {
        if is_nilpotent_ideal(t, rad) {
            fired += 1;
            subset_of(rad, &meet, &format!("{name} ⊆ cond_l ∩ cond_r"))?;
            subset_of(&product_span(t, rad, rad), ctx.cond(), &format!("{name}² ⊆ cond"))?;
        }
    }
    Ok(format!("|J(R)|={} |Nil*(R)|={} nilpotent radicals checked={fired}", j.count(), nil.count()))
}

fn c10(ctx: &PairContext) -> Result<String, Failure> {
    let rs = ctx.r_scope();
    let m = ModuleView::new(ctx.r().clone(), rs.clone(), Side::Right)?;
    let maxs = m.maximal_submodules(&ctx.caps)?;
    ensure(!maxs.is_empty(), "T/R has no maximal submodule", vec![])?;
    for sub in &maxs {
        let quotient = ModuleView::new(m.preimage(sub), rs.clone(), Side::Right)?;
        set_eq(&module_annihilator(&quotient), ctx.cond_l(), "r.ann_R(T/M) = cond_l")?;
    }
    ensure(
        is_right_primitive_ideal(&rs, ctx.cond_l(), &ctx.caps)?,
        "cond_l is not right primitive in R",
        vec![],
    )?;
    Ok(format!("{} maximal submodules", maxs.len()))
}

fn t_commutative(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(ctx.t().is_commutative())
}

fn c11(ctx: &PairContext) -> Result<String, Failure> {
    let rs = ctx.r_scope();
    let m = ModuleView::new(ctx.r().clone(), rs, Side::Right)?;
    let maximal = ctx.r_max(Side::TwoSided)?.contains(ctx.cond());
    let has_max_sub = !m.maximal_submodules(&ctx.caps)?.is_empty();
    let semisimple = semisimplicity(&m, &ctx.caps)?.semisimple;
    ensure(
        maximal == has_max_sub && has_max_sub == semisimple,
        format!("cond maximal={maximal} maximal submodule={has_max_sub} semisimple={semisimple}"),
        vec![],
    )?;
    Ok(format!("all {maximal}"))
}

fn c12(ctx: &PairContext) -> Result<String, Failure> {
    let max = ctx.r_max(Side::TwoSided)?;
    ensure(max.contains(ctx.cond_l()), "cond_l ∉ Max(R)", vec![])?;
    ensure(max.contains(ctx.cond_r()), "cond_r ∉ Max(R)", vec![])?;
    for side in [Side::Right, Side::Left] {
        let m = ModuleView::new(ctx.r().clone(), ctx.r_scope(), side)?;
        let s = semisimplicity(&m, &ctx.caps)?;
        ensure(
            s.semisimple && s.isotypic,
            format!("T/R as {side} R-module: semisimple={} isotypic={}", s.semisimple, s.isotypic),
            vec![],
        )?;
    }
    let local = ctx.r_max(Side::Right)?.len() == 1;
    if local {
        c08(ctx)?;
    }
    Ok(format!("local={local}"))
}

fn c13(ctx: &PairContext) -> Result<String, Failure> {
    let (ts, rs) = (ctx.t_scope(), ctx.r_scope());
    let p = ctx.cond_r();
    let cp_right_t = completely_prime_right_witness(&ts, p)?;
    let cp_r = completely_prime_witness(&rs, p)?;
    let torsion = torsion_witness(&ctx.pair);
    if cp_right_t.is_none() {
        if let Some(w) = cp_r {
            return fail("P completely prime right in T but not completely prime in R", pair_vec(w));
        }
        if let Some(w) = torsion {
            return fail("P completely prime right in T but T/P has torsion", pair_vec(w));
        }
    }
    if cp_r.is_none() && torsion.is_none() {
        let ideal_t = is_ideal(&ts, p, Side::TwoSided);
        let idealized = cp_right_t.is_none() && *ctx.r() == idealizer(ctx.t(), p, Side::Right)?;
        ensure(
            ideal_t || idealized,
            "P completely prime in R with torsionfree T/P, yet neither an ideal of T nor a completely prime right ideal idealized by R",
            vec![],
        )?;
    }
    Ok(format!(
        "forward={} converse={}",
        cp_right_t.is_none(),
        cp_r.is_none() && torsion.is_none()
    ))
}

fn f14(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(ctx.t_max(Side::Right)?.contains(ctx.cond_r()))
}

fn c14(ctx: &PairContext) -> Result<String, Failure> {
    let p = ctx.cond_r();
    if let Some(w) = completely_prime_right_witness(&ctx.t_scope(), p)? {
        return fail("cond_r not completely prime right in T", pair_vec(w));
    }
    if let Some(w) = completely_prime_witness(&ctx.r_scope(), p)? {
        return fail("cond_r not completely prime in R", pair_vec(w));
    }
    if let Some(w) = torsion_witness(&ctx.pair) {
        return fail("T/cond_r has torsion over R/cond_r", pair_vec(w));
    }
    Ok(String::new())
}

fn f15(ctx: &PairContext) -> Result<bool, CoreError> {
    is_completely_prime_right_ideal(&ctx.t_scope(), ctx.cond_r())
}

fn c15(ctx: &PairContext) -> Result<String, Failure> {
    let p = ctx.cond_r();
    let ts = ctx.t_scope();
    let t_division = is_ideal(&ts, p, Side::TwoSided) && is_division_quotient(&ts, p)?;
    let r_division = is_division_quotient(&ctx.r_scope(), p)?;
    ensure(t_division || r_division, "neither T/P nor R/P is a division ring", vec![])?;
    Ok(format!("T/P division={t_division} R/P division={r_division}"))
}

fn f16(ctx: &PairContext) -> Result<bool, CoreError> {
    is_duo(&ctx.t_scope(), Side::Left, &ctx.caps)
}

fn c16(ctx: &PairContext) -> Result<String, Failure> {
    set_eq(ctx.cond(), ctx.cond_l(), "cond = cond_l")?;
    if let Some(w) = completely_prime_witness(&ctx.r_scope(), ctx.cond())? {
        return fail("cond not completely prime in R", pair_vec(w));
    }
    let duo = is_duo(&ctx.t_scope(), Side::TwoSided, &ctx.caps)?;
    if duo {
        set_eq(ctx.cond(), ctx.cond_r(), "cond = cond_r")?;
    }
    Ok(format!("duo={duo}"))
}

fn all_equal(ctx: &PairContext) -> bool {
    ctx.cond() == ctx.cond_l() && ctx.cond() == ctx.cond_r()
}

fn c17(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let c = centralizer(t, ctx.r());
    if c.is_subset(ctx.r()) {
        return Ok("C_T(R) ⊆ R".into());
    }
    ensure(all_equal(ctx), "C_T(R) ⊄ R but conductors differ", c.difference(ctx.r()).iter().next().into_iter().collect())?;
    let alpha = c.difference(ctx.r()).iter().find(|&a| {
        let mut g = ctx.r().clone();
        g.insert(a);
        subring_closure(t, &g).is_full()
    });
    ensure(alpha.is_some(), "no α ∈ C_T(R) \\ R generates T over R", vec![])?;
    Ok("conductors equal; T = R[α]".into())
}

fn c18(ctx: &PairContext) -> Result<String, Failure> {
    let cases = conductor_cases(&ctx.pair)?;
    ensure(cases.len() == 1, format!("cases holding: {cases:?}"), vec![])?;
    if let Some(w) = prime_witness(&ctx.r_scope(), ctx.cond())? {
        ensure(cases[0] == 3, format!("cond not prime in R but case {}", cases[0]), pair_vec(w))?;
    }
    Ok(format!("case {}", cases[0]))
}

fn c19(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let mut notes = Vec::new();
    for (name, a, side) in [("cond_r", ctx.cond_r(), Side::Right), ("cond_l", ctx.cond_l(), Side::Left)] {
        let rep = phi_isomorphism_check(t, a, side, &ctx.caps)?;
        if let Some(f) = &rep.failure {
            return fail(format!("φ for {name}: {f:?}"), vec![]);
        }
        ensure(rep.surjective, format!("φ for {name} is not surjective"), vec![])?;
        let e = &rep.endo.ring;
        if *ctx.r() == idealizer(t, a, side)? {
            ensure(
                is_prime_ideal(&Scope::whole(e), &e.zero_set())?,
                format!("R = I({name}) but End is not prime"),
                vec![],
            )?;
            notes.push(format!("{name}: R idealizes, End prime"));
        } else {
            ensure(
                is_maximal_subring(e, &rep.image_of(ctx.r()))?,
                format!("image of R/{name} is not a maximal subring of End"),
                vec![],
            )?;
            notes.push(format!("{name}: image maximal in End"));
        }
    }
    Ok(notes.join("; "))
}

fn c20(ctx: &PairContext) -> Result<String, Failure> {
    for side in [Side::Right, Side::Left] {
        let rep = psi_embedding_check(&ctx.pair, side, &ctx.caps)?;
        if let Some(f) = rep.failure {
            return fail(format!("ψ on the {side}: {f:?}"), vec![]);
        }
    }
    Ok(String::new())
}

fn c21(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let p = quotient_exponent(&ctx.pair);
    ensure(is_prime_number(p), format!("exponent of T/R is {p}"), vec![])?;
    for (name, i) in [("cond_l", ctx.cond_l()), ("cond_r", ctx.cond_r()), ("cond", ctx.cond())] {
        let ch = quotient_characteristic(t, i);
        ensure(ch == p, format!("Char(R/{name}) = {ch} ≠ {p}"), vec![])?;
    }
    Ok(format!("p={p}"))
}

fn c22(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let max = ctx.r_max(Side::TwoSided)?;
    let twin_max = max.iter().enumerate().any(|(i, m)| {
        max[i + 1..]
            .iter()
            .any(|n| quotient_characteristic(t, m) == quotient_characteristic(t, n))
    });
    ensure(
        all_equal(ctx) || twin_max,
        "conductors differ yet no two maximal ideals share a quotient characteristic",
        vec![],
    )?;
    let chars: Vec<usize> = ctx.r_primes()?.iter().map(|p| quotient_characteristic(t, p)).collect();
    let injective = chars.iter().enumerate().all(|(i, c)| !chars[i + 1..].contains(c));
    if injective {
        ensure(all_equal(ctx), "Char injective on Spec(R) but conductors differ", vec![])?;
        if let Some(w) = prime_witness(&ctx.r_scope(), ctx.cond())? {
            return fail("Char injective on Spec(R) but cond not prime in R", pair_vec(w));
        }
    }
    Ok(format!("injective={injective}"))
}

fn f23(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(!is_prime_number(conductor_core::ring::characteristic(ctx.t())))
}

fn c23(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let p = quotient_exponent(&ctx.pair);
    let pt = t.subset(t.elements().map(|x| t.times(p, x)));
    subset_of(&pt, ctx.cond(), &format!("{p}T ⊆ cond"))?;
    ensure(!is_zero_set(&pt), format!("{p}T = 0"), vec![])?;
    ensure(!is_zero_set(ctx.cond()), "cond = 0", vec![])?;
    Ok(format!("p={p} |pT|={} |cond|={}", pt.count(), ctx.cond().count()))
}

fn f24(ctx: &PairContext) -> Result<bool, CoreError> {
    let ts = ctx.t_scope();
    let l = annihilator(&ts, ctx.cond(), Side::Left);
    let r = annihilator(&ts, ctx.cond(), Side::Right);
    Ok(sum_of(ctx.t(), &l, &r).is_full())
}

fn c24(ctx: &PairContext) -> Result<String, Failure> {
    let sq = product_span(ctx.t(), ctx.cond(), ctx.cond());
    ensure(is_zero_set(&sq), "cond² ≠ 0", sq.iter().find(|&x| x != ctx.t().zero()).into_iter().collect())?;
    Ok(String::new())
}

fn f25(ctx: &PairContext) -> Result<bool, CoreError> {
    let (cl, cr) = (ctx.cond_l(), ctx.cond_r());
    Ok(!cl.comparable(cr)
        || is_zero_set(&product_span(ctx.t(), cl, cr))
        || (is_zero_set(&cl.intersection(cr)) && !is_zero_set(cl) && !is_zero_set(cr)))
}

fn c25(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let rs = ctx.r_scope();
    let (cl, cr) = (ctx.cond_l(), ctx.cond_r());
    let lann = |s: &Subset| annihilator(&rs, s, Side::Left);
    let rann = |s: &Subset| annihilator(&rs, s, Side::Right);
    let mut items = Vec::new();
    let incomparable = !cl.comparable(cr);
    if incomparable {
        subset_of(&sum_of(t, &lann(cl), &rann(cl)), cr, "l.ann_R(cond_l) + r.ann_R(cond_l) ⊆ cond_r")?;
        subset_of(&sum_of(t, &lann(cr), &rann(cr)), cl, "l.ann_R(cond_r) + r.ann_R(cond_r) ⊆ cond_l")?;
        items.push(1);
    }
    let min = ctx.r_min_over(&t.zero_set())?;
    if is_zero_set(&product_span(t, cl, cr)) {
        ensure(
            min.iter().all(|p| p == cl || p == cr),
            format!("cond_l·cond_r = 0 but Min(R) has {} members outside {{cond_l, cond_r}}", min.len()),
            vec![],
        )?;
        if incomparable {
            set_eq(cl, &lann(cr), "cond_l = l.ann_R(cond_r)")?;
            set_eq(cr, &rann(cl), "cond_r = r.ann_R(cond_l)")?;
            ensure(min.len() == 2, "Min(R) ≠ {cond_l, cond_r}", vec![])?;
        }
        items.push(2);
    }
    if is_zero_set(&cl.intersection(cr)) && !is_zero_set(cl) && !is_zero_set(cr) {
        set_eq(cl, &lann(cr), "cond_l = l.ann_R(cond_r)")?;
        set_eq(cl, &rann(cr), "cond_l = r.ann_R(cond_r)")?;
        set_eq(cr, &rann(cl), "cond_r = r.ann_R(cond_l)")?;
        set_eq(cr, &lann(cl), "cond_r = l.ann_R(cond_l)")?;
        ensure(min.contains(cl) && min.contains(cr), "conductors not minimal primes of R", vec![])?;
        ensure(
            !is_prime_ideal(&ctx.t_scope(), &t.zero_set())?,
            "T is prime",
            vec![],
        )?;
        items.push(3);
        let reduced = ctx.r().iter().all(|x| x == t.zero() || t.mul(x, x) != t.zero());
        if reduced {
            for (name, p) in [("cond_l", cl), ("cond_r", cr)] {
                if let Some(w) = completely_prime_witness(&rs, p)? {
                    return fail(format!("R reduced but {name} not completely prime in R"), pair_vec(w));
                }
            }
            items.push(4);
        }
    }
    Ok(format!("items {items:?}"))
}

fn f26(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(ctx.r_min_over(&ctx.t().zero_set())?.len() >= 3)
}

fn c26(ctx: &PairContext) -> Result<String, Failure> {
    ensure(!is_zero_set(ctx.cond()), "cond = 0", vec![])?;
    ensure(
        !is_zero_set(&product_span(ctx.t(), ctx.cond_l(), ctx.cond_r())),
        "cond_l·cond_r = 0",
        vec![],
    )?;
    Ok(format!("|cond|={}", ctx.cond().count()))
}

/// Shared body of the element-wise statements for `P = cond_r` (`mirror`
/// false) and `P = cond_l` (`mirror` true).
fn sandwich_body(ctx: &PairContext, mirror: bool) -> Result<String, Failure> {
    let t = ctx.t();
    let r = ctx.r();
    let whole = t.full_set();
    let p = if mirror { ctx.cond_l() } else { ctx.cond_r() };
    let tuples = sandwiches(t, p);
    for &(a, b) in &tuples {
        let w = vec![a, b];
        ensure(is_right_n_integral(&ctx.pair, a, 2), "a not right 2-integral", w.clone())?;
        ensure(is_left_n_integral(&ctx.pair, b, 2), "b not left 2-integral", w.clone())?;
        for (name, x) in [("a", a), ("b", b)] {
            if !r.contains(x) {
                let span = sum_of(t, r, &span3(t, r, &singleton(t, x), r));
                ensure(span == whole, format!("{name} ∉ R but R + R{name}R ≠ T"), w.clone())?;
            }
        }
        let (a_in, b_in) = (r.contains(a), r.contains(b));
        if mirror {
            ensure(a_in || !b_in, "a ∉ R but b ∈ R", w.clone())?;
            ensure(b_in || !a_in || ctx.cond_r().contains(a), "b ∉ R, a ∈ R, a ∉ cond_r", w.clone())?;
        } else {
            ensure(b_in || !a_in, "b ∉ R but a ∈ R", w.clone())?;
            ensure(a_in || !b_in || ctx.cond_l().contains(b), "a ∉ R, b ∈ R, b ∉ cond_l", w.clone())?;
        }
    }
    Ok(format!("{} tuples", tuples.len()))
}

fn c27(ctx: &PairContext) -> Result<String, Failure> {
    sandwich_body(ctx, false)
}

fn c28(ctx: &PairContext) -> Result<String, Failure> {
    sandwich_body(ctx, true)
}

fn f_int_closed(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(is_n_integrally_closed(&ctx.pair, 2))
}

fn c29(ctx: &PairContext) -> Result<String, Failure> {
    let ts = ctx.t_scope();
    for (name, p, side) in [("cond_l", ctx.cond_l(), Side::Left), ("cond_r", ctx.cond_r(), Side::Right)] {
        if let Some(w) = prime_one_sided_witness(&ts, p, side)? {
            return fail(format!("{name} not a prime {side} ideal of T"), pair_vec(w));
        }
    }
    Ok(String::new())
}

fn c30(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let r = ctx.r();
    let whole = t.full_set();
    let tuples = sandwiches(t, ctx.cond());
    for &(a, b) in &tuples {
        let w = vec![a, b];
        ensure(r.contains(a) && r.contains(b), "a or b outside R", w.clone())?;
        let (sa, sb) = (singleton(t, a), singleton(t, b));
        ensure(span3(t, r, &sa, &whole).is_subset(r), "RaT ⊄ R", w.clone())?;
        let tar = span3(t, &whole, &sa, r);
        ensure(!tar.is_subset(r), "TaR ⊆ R", w.clone())?;
        ensure(sum_of(t, r, &tar) == whole, "R + TaR ≠ T", w.clone())?;
        ensure(span3(t, &whole, &sb, r).is_subset(r), "TbR ⊄ R", w.clone())?;
        let rbt = span3(t, r, &sb, &whole);
        ensure(!rbt.is_subset(r), "RbT ⊆ R", w.clone())?;
        ensure(sum_of(t, r, &rbt) == whole, "R + RbT ≠ T", w.clone())?;
        ensure(ctx.cond_r().contains(a) && !ctx.cond_l().contains(a), "a ∉ cond_r \\ cond_l", w.clone())?;
        ensure(ctx.cond_l().contains(b) && !ctx.cond_r().contains(b), "b ∉ cond_l \\ cond_r", w.clone())?;
    }
    Ok(format!("{} tuples", tuples.len()))
}

fn c31(ctx: &PairContext) -> Result<String, Failure> {
    let t = ctx.t();
    let c = ctx.cond();
    let mut fired = 0;
    for x in ctx.cond_l().union(ctx.cond_r()).iter() {
        if t.elements().all(|s| c.contains(t.mul(t.mul(x, s), x))) {
            fired += 1;
            ensure(c.contains(x), "xTx ⊆ cond but x ∉ cond", vec![x])?;
        }
    }
    Ok(format!("{fired} elements"))
}

fn f_square_closed(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(is_square_closed(&ctx.pair))
}

fn c32(ctx: &PairContext) -> Result<String, Failure> {
    let ts = ctx.t_scope();
    if let Some(x) = semiprime_witness(&ts, ctx.cond())? {
        return fail("cond not semiprime in T", vec![x]);
    }
    let prime = is_prime_ideal(&ts, ctx.cond())?;
    if !prime {
        set_eq(ctx.cond(), &ctx.cond_l().intersection(ctx.cond_r()), "cond = cond_l ∩ cond_r")?;
    }
    Ok(format!("prime in T={prime}"))
}

fn left_full(ctx: &PairContext) -> bool {
    product_span(ctx.t(), ctx.cond_l(), &ctx.t().full_set()).is_full()
}

fn right_full(ctx: &PairContext) -> bool {
    product_span(ctx.t(), &ctx.t().full_set(), ctx.cond_r()).is_full()
}

fn f33(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(left_full(ctx) || right_full(ctx))
}

fn c33(ctx: &PairContext) -> Result<String, Failure> {
    let (ts, rs) = (ctx.t_scope(), ctx.r_scope());
    let mut sides = Vec::new();
    if left_full(ctx) {
        set_eq(ctx.r(), &idealizer(ctx.t(), ctx.cond_l(), Side::Left)?, "R = I_T(cond_l)")?;
        ensure(!is_quasi_duo(&ts, Side::Left, &ctx.caps)?, "T is left quasi-duo", vec![])?;
        ensure(is_right_primitive_ideal(&rs, ctx.cond_l(), &ctx.caps)?, "cond_l not right primitive in R", vec![])?;
        sides.push("left");
    }
    if right_full(ctx) {
        set_eq(ctx.r(), &idealizer(ctx.t(), ctx.cond_r(), Side::Right)?, "R = I_T(cond_r)")?;
        ensure(!is_quasi_duo(&ts, Side::Right, &ctx.caps)?, "T is right quasi-duo", vec![])?;
        ensure(is_left_primitive_ideal(&rs, ctx.cond_r(), &ctx.caps)?, "cond_r not left primitive in R", vec![])?;
        sides.push("right");
    }
    Ok(sides.join("+"))
}

fn f34(ctx: &PairContext) -> Result<bool, CoreError> {
    let c = ctx.cond();
    Ok(ctx.t_max(Side::TwoSided)?.contains(c) && c.is_proper_subset(ctx.cond_l()) && c.is_proper_subset(ctx.cond_r()))
}

fn c34(ctx: &PairContext) -> Result<String, Failure> {
    let rs = ctx.r_scope();
    ensure(is_right_primitive_ideal(&rs, ctx.cond_l(), &ctx.caps)?, "cond_l not right primitive in R", vec![])?;
    ensure(is_left_primitive_ideal(&rs, ctx.cond_r(), &ctx.caps)?, "cond_r not left primitive in R", vec![])?;
    ensure(left_full(ctx), "cond_l·T ≠ T", vec![])?;
    ensure(right_full(ctx), "T·cond_r ≠ T", vec![])?;
    Ok(String::new())
}

fn c35(ctx: &PairContext) -> Result<String, Failure> {
    let c = centralizer(ctx.t(), ctx.r());
    let inside = c.is_subset(ctx.r());
    ensure(inside || all_equal(ctx), "C_T(R) ⊄ R and conductors differ", c.difference(ctx.r()).iter().next().into_iter().collect())?;
    Ok(format!("C_T(R) ⊆ R: {inside}"))
}

fn f36(ctx: &PairContext) -> Result<bool, CoreError> {
    Ok(!is_zero_set(ctx.cond()) && is_prime_ideal(&ctx.t_scope(), &ctx.t().zero_set())?)
}

fn c36(ctx: &PairContext) -> Result<String, Failure> {
    let rs = ctx.r_scope();
    ensure(is_right_primitive_ideal(&rs, ctx.cond_l(), &ctx.caps)?, "cond_l not right primitive in R", vec![])?;
    ensure(is_left_primitive_ideal(&rs, ctx.cond_r(), &ctx.caps)?, "cond_r not left primitive in R", vec![])?;
    Ok(String::new())
}

static REGISTRY: [Check; 36] = [
    Check { id: "C01", anchor: "conductor chain cond_l·cond_r ⊆ cond ⊆ cond_l ∩ cond_r, with the expected ideal types", filter: None, body: c01 },
    Check { id: "C02", anchor: "cond_l and cond_r are prime ideals of R", filter: None, body: c02 },
    Check { id: "C03", anchor: "the radical of cond in R is cond_l ∩ cond_r", filter: None, body: c03 },
    Check { id: "C04", anchor: "cond prime in R iff it equals a one-sided conductor iff the conductors are comparable", filter: None, body: c04 },
    Check { id: "C05", anchor: "at most two minimal primes of R over cond; incomparable conductors give exactly cond_l, cond_r", filter: None, body: c05 },
    Check { id: "C06", anchor: "cond semiprime in R iff cond = cond_l ∩ cond_r", filter: None, body: c06 },
    Check { id: "C07", anchor: "cond is the annihilator of T/cond_l and T/cond_r over T and over R", filter: None, body: c07 },
    Check { id: "C08", anchor: "cond maximal in R forces all three conductors equal", filter: Some(f08), body: c08 },
    Check { id: "C09", anchor: "nilpotent J(R) and Nil*(R) lie in cond_l ∩ cond_r with square in cond", filter: None, body: c09 },
    Check { id: "C10", anchor: "maximal submodules of T/R have annihilator cond_l, which is right primitive in R", filter: None, body: c10 },
    Check { id: "C11", anchor: "commutative T: cond maximal iff T/R has a maximal submodule iff T/R is semisimple", filter: Some(t_commutative), body: c11 },
    Check { id: "C12", anchor: "cond_l, cond_r maximal in R and T/R isotypic semisimple on both sides", filter: None, body: c12 },
    Check { id: "C13", anchor: "P = cond_r completely prime right in T iff completely prime in R with torsionfree T/P (up to idealizer)", filter: None, body: c13 },
    Check { id: "C14", anchor: "cond_r maximal right in T gives complete primality and torsionfreeness", filter: Some(f14), body: c14 },
    Check { id: "C15", anchor: "cond_r completely prime right in T: T/P or R/P is a division ring", filter: Some(f15), body: c15 },
    Check { id: "C16", anchor: "left duo T: cond = cond_l is completely prime in R", filter: Some(f16), body: c16 },
    Check { id: "C17", anchor: "C_T(R) ⊆ R, or equal conductors with T generated over R by a centralizing element", filter: None, body: c17 },
    Check { id: "C18", anchor: "exactly one of the four conductor configurations holds", filter: None, body: c18 },
    Check { id: "C19", anchor: "idealizer quotients are the endomorphism rings of T/A", filter: None, body: c19 },
    Check { id: "C20", anchor: "R modulo a one-sided conductor embeds in End(T/R)", filter: None, body: c20 },
    Check { id: "C21", anchor: "T/R has prime exponent p and every conductor quotient of R has characteristic p", filter: None, body: c21 },
    Check { id: "C22", anchor: "characteristic separation of maximal ideals and of Spec(R)", filter: None, body: c22 },
    Check { id: "C23", anchor: "non-prime characteristic of T forces pT ⊆ cond and cond ≠ 0", filter: Some(f23), body: c23 },
    Check { id: "C24", anchor: "annihilators of cond summing to T force cond² = 0", filter: Some(f24), body: c24 },
    Check { id: "C25", anchor: "annihilator descriptions of the conductors and minimal primes of R", filter: Some(f25), body: c25 },
    Check { id: "C26", anchor: "three or more minimal primes of R force cond ≠ 0 and cond_l·cond_r ≠ 0", filter: Some(f26), body: c26 },
    Check { id: "C27", anchor: "aTb ⊆ cond_r with a, b outside it: 2-integrality and generation of T", filter: None, body: c27 },
    Check { id: "C28", anchor: "aTb ⊆ cond_l with a, b outside it: 2-integrality and generation of T", filter: None, body: c28 },
    Check { id: "C29", anchor: "2-integrally closed R: one-sided conductors are prime one-sided ideals of T", filter: Some(f_int_closed), body: c29 },
    Check { id: "C30", anchor: "2-integrally closed R: aTb ⊆ cond with a, b outside it places a, b in R", filter: Some(f_int_closed), body: c30 },
    Check { id: "C31", anchor: "x in a one-sided conductor with xTx ⊆ cond lies in cond", filter: None, body: c31 },
    Check { id: "C32", anchor: "square-closed R: cond is semiprime in T", filter: Some(f_square_closed), body: c32 },
    Check { id: "C33", anchor: "cond_l·T = T or T·cond_r = T: R is an idealizer and T is not quasi-duo", filter: Some(f33), body: c33 },
    Check { id: "C34", anchor: "cond maximal in T strictly inside both one-sided conductors: primitivity and generation", filter: Some(f34), body: c34 },
    Check { id: "C35", anchor: "C_T(R) ⊆ R or all conductors coincide", filter: None, body: c35 },
    Check { id: "C36", anchor: "prime T with nonzero cond: one-sided conductors primitive in R", filter: Some(f36), body: c36 },
];

pub fn registry() -> &'static [Check] {
    &REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_sequential() {
        for (i, c) in registry().iter().enumerate() {
            assert_eq!(c.id, format!("C{:02}", i + 1));
        }
        assert!(find_check("c05").is_some());
        assert!(find_check("C37").is_none());
    }

    #[test]
    fn prime_numbers() {
        let primes: Vec<usize> = (0..20).filter(|&n| is_prime_number(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
