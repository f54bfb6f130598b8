//! Machine checks of the structural laws relating the algebra, its sharp
//! elements and its intrinsic topologies.
//!
//! Every law has a fixed id. A check whose hypotheses fail on the given
//! instance is reported as skipped, never as passed; a failing check
//! carries a witness naming the elements involved.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{EffectAlgebra, Lattice};
use crate::error::Error;
use crate::limits::Limits;
use crate::set::ElemSet;
use crate::topo::{
    frink_ideal_topology, interval_topology, is_totally_order_disconnected, oplus_is_continuous,
    order_topology, unary_op_continuous, Topology,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
}

impl LawStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, LawStatus::Fail { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            LawStatus::Pass => "pass",
            LawStatus::Fail { .. } => "fail",
            LawStatus::Skipped { .. } => "skipped",
        }
    }
}

impl std::fmt::Display for LawStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LawStatus::Pass => write!(f, "pass"),
            LawStatus::Fail { witness } => write!(f, "fail ({witness})"),
            LawStatus::Skipped { reason } => write!(f, "skipped ({reason})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LawEntry {
    pub id: &'static str,
    pub status: LawStatus,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub instance: String,
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    pub fn get(&self, id: &str) -> Option<&LawStatus> {
        self.entries.iter().find(|e| e.id == id).map(|e| &e.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawEntry> {
        self.entries.iter().filter(|e| e.status.is_fail())
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }
}

enum Outcome {
    Fail(String),
    Skip(String),
}

impl From<Error> for Outcome {
    fn from(err: Error) -> Outcome {
        match err {
            Error::SizeGuardExceeded { .. } | Error::NotALattice { .. } | Error::NotAtomic(_) => {
                Outcome::Skip(err.to_string())
            }
            other => Outcome::Fail(other.to_string()),
        }
    }
}

type Check = Result<(), Outcome>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Outcome::Fail(format!($($fmt)+)));
        }
    };
}

type LawFn = fn(&EffectAlgebra, &Limits) -> Check;

/// Law ids in report order.
pub const REGISTRY: [&str; 22] = [
    "Thm2.1",
    "Thm3.1",
    "Thm4.1",
    "Thm4.2/4.3",
    "Cor4.1",
    "Lem2.3",
    "Lem2.4",
    "Lem2.5",
    "Lem3.1.i",
    "Lem3.1.ii",
    "Lem3.1.iii",
    "Lem3.2",
    "Lem3.3.i",
    "Lem3.3.ii",
    "Lem3.3.iii",
    "Lem3.3.iv",
    "Lem3.4",
    "Lem3.5",
    "Lem3.6",
    "Lem3.7",
    "Lem4.2",
    "PrincipalIffSharp",
];

const CHECKS: [LawFn; 22] = [
    four_way_equivalence,
    frink_against_order,
    continuity_forces_hausdorff,
    oplus_continuity,
    mv_oplus_continuity,
    finite_elements_compact,
    finite_intervals_clopen,
    totally_order_disconnected,
    sum_is_join_plus_meet,
    disjoint_multiples,
    compatible_distributivity,
    family_splitting,
    proper_multiples_unsharp,
    full_multiple_sharp,
    atom_sums_are_joins,
    atom_decompositions,
    sharp_decompositions,
    sharp_covers,
    finite_elements_ideal,
    interval_equals_order,
    lattice_ops_continuous,
    principal_iff_sharp,
];

/// Runs every registered law on `e`, in registry order.
pub fn run_all(e: &EffectAlgebra, limits: &Limits) -> LawReport {
    let entries = REGISTRY
        .iter()
        .zip(CHECKS)
        .map(|(&id, check)| {
            let start = Instant::now();
            let status = match check(e, limits) {
                Ok(()) => LawStatus::Pass,
                Err(Outcome::Fail(witness)) => LawStatus::Fail { witness },
                Err(Outcome::Skip(reason)) => LawStatus::Skipped { reason },
            };
            LawEntry {
                id,
                status,
                elapsed: start.elapsed(),
            }
        })
        .collect();
    LawReport {
        instance: e.name().to_string(),
        entries,
    }
}

fn lattice(e: &EffectAlgebra) -> Result<&Lattice, Outcome> {
    e.lattice().map_err(|err| match err {
        Error::NotALattice { a, b, missing } => Outcome::Skip(format!(
            "not a lattice: {} and {} have no {missing}",
            e.element_name(a),
            e.element_name(b)
        )),
        other => other.into(),
    })
}

fn atomic_lattice(e: &EffectAlgebra) -> Result<&Lattice, Outcome> {
    let lat = lattice(e)?;
    if let Some(x) = e.atomicity_witness() {
        return Err(Outcome::Skip(format!("not atomic: {}", e.element_name(x))));
    }
    Ok(lat)
}

fn o_continuous(e: &EffectAlgebra, limits: &Limits) -> Check {
    if !e.is_o_continuous(limits)? {
        return Err(Outcome::Skip("not (o)-continuous".into()));
    }
    Ok(())
}

fn distributive(e: &EffectAlgebra) -> Check {
    if let Some((x, y, z)) = e.distributivity_witness()? {
        let nm = |v| e.element_name(v);
        return Err(Outcome::Skip(format!(
            "not distributive: {} ∧ ({} ∨ {}) differs from the distributed form",
            nm(x),
            nm(y),
            nm(z)
        )));
    }
    Ok(())
}

fn names(e: &EffectAlgebra, s: ElemSet) -> String {
    let list: Vec<&str> = s.iter().map(|x| e.element_name(x)).collect();
    format!("{{{}}}", list.join(", "))
}

/// Order continuity, being order-topological, total order-disconnectedness
/// and algebraicity are evaluated separately and must coincide.
///
/// Being order-topological on a finite carrier means order continuity plus
/// a discrete order topology; it is cross-checked against order continuity
/// plus a Hausdorff order topology.
fn four_way_equivalence(e: &EffectAlgebra, limits: &Limits) -> Check {
    atomic_lattice(e)?;
    let o_cont = e.is_o_continuous(limits)?;
    let t = order_topology(e, limits)?;
    let order_topological = o_cont && t.is_discrete();
    ensure!(
        order_topological == (o_cont && t.is_hausdorff()),
        "order topology: discrete={} but Hausdorff={}",
        t.is_discrete(),
        t.is_hausdorff()
    );
    let disconnected = is_totally_order_disconnected(e, limits)?;
    let algebraic = e.is_algebraic(limits)?;
    let all = [o_cont, order_topological, disconnected, algebraic];
    ensure!(
        all.iter().all(|&p| p == all[0]),
        "o-continuous={o_cont}, order-topological={order_topological}, \
         totally order-disconnected={disconnected}, algebraic={algebraic}"
    );
    Ok(())
}

fn first_open_difference(a: &Topology, b: &Topology) -> Option<usize> {
    (0..a.size()).find(|&x| a.neighbourhood(x) != b.neighbourhood(x))
}

/// The Frink ideal topology is Hausdorff and finer than the order topology,
/// and the four equivalent conditions relating them all hold.
fn frink_against_order(e: &EffectAlgebra, limits: &Limits) -> Check {
    atomic_lattice(e)?;
    distributive(e)?;
    let id = frink_ideal_topology(e)?;
    let o = order_topology(e, limits)?;
    ensure!(id.is_hausdorff(), "Frink ideal topology is not Hausdorff");
    ensure!(
        id.finer_than(&o)?,
        "Frink ideal topology is not finer than the order topology at {}",
        e.element_name(first_open_difference(&id, &o).unwrap_or(0))
    );
    let finite = e.finite_elements()?;
    let conditions = [
        id.equals(&o)?,
        finite.contains(e.one()),
        finite == e.carrier(),
        id.is_discrete() && o.is_discrete(),
    ];
    ensure!(
        conditions.iter().all(|&c| c),
        "conditions (equal, 1 finite, all finite, both discrete) = {conditions:?}; non-finite {}",
        names(e, e.carrier().difference(finite))
    );
    Ok(())
}

/// If `⊕` is continuous for the order topology, that topology is Hausdorff.
fn continuity_forces_hausdorff(e: &EffectAlgebra, limits: &Limits) -> Check {
    lattice(e)?;
    o_continuous(e, limits)?;
    let t = order_topology(e, limits)?;
    if !oplus_is_continuous(e, &t)? {
        return Err(Outcome::Skip("⊕ is not continuous for the order topology".into()));
    }
    ensure!(t.is_hausdorff(), "⊕ continuous but the order topology is not Hausdorff");
    Ok(())
}

/// `⊕` is continuous on its domain, and a pair `x, y` is eventually
/// constant-equal exactly when `(x ∨ y) ⊖ x` and `x ⊖ (x ∧ y)` vanish.
fn oplus_continuity(e: &EffectAlgebra, limits: &Limits) -> Check {
    let lat = atomic_lattice(e)?;
    o_continuous(e, limits)?;
    let t = order_topology(e, limits)?;
    ensure!(oplus_is_continuous(e, &t)?, "⊕ is not continuous on its domain");
    let n = e.size();
    for x in 0..n {
        for y in 0..n {
            let up = e.ominus(lat.join(x, y), x);
            let down = e.ominus(x, lat.meet(x, y));
            let vanish = up == Some(e.zero()) && down == Some(e.zero());
            ensure!(
                vanish == (x == y),
                "difference characterization fails at x={}, y={}",
                e.element_name(x),
                e.element_name(y)
            );
        }
    }
    Ok(())
}

/// On MV instances `⊕` is continuous for the order topology.
fn mv_oplus_continuity(e: &EffectAlgebra, limits: &Limits) -> Check {
    atomic_lattice(e)?;
    if let Some((a, b)) = e.incompatible_pair()? {
        return Err(Outcome::Skip(format!(
            "not MV: {} and {} are not compatible",
            e.element_name(a),
            e.element_name(b)
        )));
    }
    let t = order_topology(e, limits)?;
    ensure!(oplus_is_continuous(e, &t)?, "⊕ is not continuous on its domain");
    Ok(())
}

/// Every finite element is compact.
fn finite_elements_compact(e: &EffectAlgebra, limits: &Limits) -> Check {
    atomic_lattice(e)?;
    o_continuous(e, limits)?;
    for u in e.finite_elements()? {
        ensure!(e.is_compact_element(u, limits)?, "finite element {} is not compact", e.element_name(u));
    }
    Ok(())
}

/// `[u, 1]` and `[0, u']` are clopen in the order topology for finite `u`.
fn finite_intervals_clopen(e: &EffectAlgebra, limits: &Limits) -> Check {
    atomic_lattice(e)?;
    o_continuous(e, limits)?;
    let t = order_topology(e, limits)?;
    for u in e.finite_elements()? {
        for s in [e.interval(u, e.one()), e.interval(e.zero(), e.orthosupplement(u))] {
            ensure!(
                t.is_open_set(s) && t.is_closed_set(s),
                "interval {} for finite element {} is not clopen",
                names(e, s),
                e.element_name(u)
            );
        }
    }
    Ok(())
}

fn totally_order_disconnected(e: &EffectAlgebra, limits: &Limits) -> Check {
    atomic_lattice(e)?;
    o_continuous(e, limits)?;
    ensure!(is_totally_order_disconnected(e, limits)?, "not totally order-disconnected");
    Ok(())
}

/// `x ⊕ y = (x ∨ y) ⊕ (x ∧ y)` whenever the left side is defined.
fn sum_is_join_plus_meet(e: &EffectAlgebra, _: &Limits) -> Check {
    let lat = lattice(e)?;
    let n = e.size();
    for x in 0..n {
        for y in 0..n {
            if let Some(s) = e.oplus(x, y) {
                ensure!(
                    e.oplus(lat.join(x, y), lat.meet(x, y)) == Some(s),
                    "x={}, y={}",
                    e.element_name(x),
                    e.element_name(y)
                );
            }
        }
    }
    Ok(())
}

/// For `x ∧ y = 0` with `mx ⊕ ny` defined, every `kx, ly` with `k <= m`,
/// `l <= n` are disjoint and their join is their sum.
fn disjoint_multiples(e: &EffectAlgebra, _: &Limits) -> Check {
    let lat = lattice(e)?;
    let n = e.size();
    for x in (0..n).filter(|&x| x != e.zero()) {
        for y in (0..n).filter(|&y| y != e.zero() && lat.meet(x, y) == e.zero()) {
            let (ox, oy) = (e.isotropic_index(x)?, e.isotropic_index(y)?);
            let mult = |v, k| e.multiple(v, k).expect("multiple below the isotropic index");
            // reach[k][l]: some m >= k, n >= l has mx ⊕ ny defined.
            let mut reach = vec![vec![false; oy + 2]; ox + 2];
            for k in (1..=ox).rev() {
                for l in (1..=oy).rev() {
                    reach[k][l] = e.oplus(mult(x, k), mult(y, l)).is_some()
                        || reach[k + 1][l]
                        || reach[k][l + 1];
                }
            }
            for (k, row) in reach.iter().enumerate().take(ox + 1).skip(1) {
                for l in (1..=oy).filter(|&l| row[l]) {
                    let (kx, ly) = (mult(x, k), mult(y, l));
                    ensure!(
                        lat.meet(kx, ly) == e.zero() && e.oplus(kx, ly) == Some(lat.join(kx, ly)),
                        "x={}, y={}, k={k}, l={l}",
                        e.element_name(x),
                        e.element_name(y)
                    );
                }
            }
        }
    }
    Ok(())
}

/// If `x` is compatible with every member of `Y`, it distributes over and
/// is compatible with `∨Y`. All `Y` inside the compatibility set of `x`
/// are tried.
fn compatible_distributivity(e: &EffectAlgebra, limits: &Limits) -> Check {
    let lat = lattice(e)?;
    let n = e.size();
    for x in 0..n {
        let mut partners = ElemSet::EMPTY;
        for y in 0..n {
            if e.is_compatible(x, y)? {
                partners.insert(y);
            }
        }
        limits.check_directed(partners.len(), "compatible subset enumeration")?;
        let mut y_set = partners.0;
        loop {
            let ys = ElemSet(y_set);
            let top = lat.join_all(ys);
            let meets = ys.iter().fold(e.zero(), |acc, y| lat.join(acc, lat.meet(x, y)));
            ensure!(
                lat.meet(x, top) == meets && e.is_compatible(x, top)?,
                "x={}, Y={}",
                e.element_name(x),
                names(e, ys)
            );
            if y_set == 0 {
                break;
            }
            y_set = (y_set - 1) & partners.0;
        }
    }
    Ok(())
}

/// Upper bound on the work spent enumerating orthogonal families.
const FAMILY_BUDGET: u64 = 4_000_000;

/// The sum of a finite orthogonal family equals the sum of the sums of
/// any two complementary subfamilies. All multisets of nonzero elements
/// with a defined total are tried.
fn family_splitting(e: &EffectAlgebra, _: &Limits) -> Check {
    lattice(e)?;
    let mut families = Vec::new();
    let mut work = 0u64;
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), e.zero())];
    while let Some((family, total)) = stack.pop() {
        let start = family.last().copied().unwrap_or(0);
        for x in (start..e.size()).filter(|&x| x != e.zero()) {
            if let Some(next) = e.oplus(total, x) {
                let mut grown = family.clone();
                grown.push(x);
                work += 1u64 << grown.len().min(40);
                if work > FAMILY_BUDGET {
                    return Err(Outcome::Skip(format!(
                        "orthogonal family enumeration exceeds {FAMILY_BUDGET} steps"
                    )));
                }
                stack.push((grown.clone(), next));
                families.push((grown, next));
            }
        }
    }
    for (family, total) in families {
        for split in 0u64..1 << family.len() {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, &x) in family.iter().enumerate() {
                if split >> i & 1 == 1 { &mut left } else { &mut right }.push(x);
            }
            let parts = e.oplus_family(&left).zip(e.oplus_family(&right));
            ensure!(
                parts.and_then(|(l, r)| e.oplus(l, r)) == Some(total),
                "family {:?} split as {:?} + {:?}",
                family.iter().map(|&x| e.element_name(x)).collect::<Vec<_>>(),
                left.iter().map(|&x| e.element_name(x)).collect::<Vec<_>>(),
                right.iter().map(|&x| e.element_name(x)).collect::<Vec<_>>()
            );
        }
    }
    Ok(())
}

/// `ka ∧ (ka)' ≠ 0` for every atom `a` and `1 <= k < ord(a)`.
fn proper_multiples_unsharp(e: &EffectAlgebra, _: &Limits) -> Check {
    let lat = atomic_lattice(e)?;
    for a in e.atoms() {
        for k in 1..e.isotropic_index(a)? {
            let ka = e.multiple(a, k).expect("multiple below the isotropic index");
            ensure!(
                lat.meet(ka, e.orthosupplement(ka)) != e.zero(),
                "atom {}, k={k}",
                e.element_name(a)
            );
        }
    }
    Ok(())
}

/// `ord(a)·a` is sharp for every atom `a`.
fn full_multiple_sharp(e: &EffectAlgebra, _: &Limits) -> Check {
    atomic_lattice(e)?;
    for a in e.atoms() {
        let full = e.multiple(a, e.isotropic_index(a)?).expect("multiple at the isotropic index");
        ensure!(e.is_sharp(full)?, "atom {}", e.element_name(a));
    }
    Ok(())
}

/// Upper bound on the number of atom families visited.
const ATOM_FAMILY_BUDGET: u64 = 1_000_000;

/// A defined sum `⊕ k_i a_i` over distinct atoms equals `∨ k_i a_i`.
fn atom_sums_are_joins(e: &EffectAlgebra, _: &Limits) -> Check {
    let lat = atomic_lattice(e)?;
    let atoms: Vec<usize> = e.atoms().iter().collect();
    let mut visited = 0u64;
    // (next atom position, running sum, running join, parts)
    let mut stack = vec![(0usize, e.zero(), e.zero(), Vec::<(usize, usize)>::new())];
    while let Some((pos, sum, join, parts)) = stack.pop() {
        visited += 1;
        if visited > ATOM_FAMILY_BUDGET {
            return Err(Outcome::Skip(format!("more than {ATOM_FAMILY_BUDGET} atom families")));
        }
        ensure!(
            sum == join,
            "parts {:?}",
            parts.iter().map(|&(a, k)| format!("{k}·{}", e.element_name(a))).collect::<Vec<_>>()
        );
        for (i, &a) in atoms.iter().enumerate().skip(pos) {
            for k in 1..=e.isotropic_index(a)? {
                let ka = e.multiple(a, k).expect("multiple below the isotropic index");
                let Some(next) = e.oplus(sum, ka) else { break };
                let mut grown = parts.clone();
                grown.push((a, k));
                stack.push((i + 1, next, lat.join(join, ka), grown));
            }
        }
    }
    Ok(())
}

/// Every nonzero element decomposes into multiples of distinct atoms, and
/// it is sharp exactly when every multiplicity equals the atom's index.
fn atom_decompositions(e: &EffectAlgebra, _: &Limits) -> Check {
    atomic_lattice(e)?;
    for x in (0..e.size()).filter(|&x| x != e.zero()) {
        let d = e.atom_decomposition(x)?;
        let mut full = true;
        for &(a, k) in &d.parts {
            full &= k == e.isotropic_index(a)?;
        }
        ensure!(
            e.is_sharp(x)? == full,
            "{} is {}sharp but its multiplicities say otherwise",
            e.element_name(x),
            if e.is_sharp(x)? { "" } else { "not " }
        );
    }
    Ok(())
}

/// Every nonzero element has exactly one sharp part.
fn sharp_decompositions(e: &EffectAlgebra, _: &Limits) -> Check {
    atomic_lattice(e)?;
    for x in (0..e.size()).filter(|&x| x != e.zero()) {
        e.sharp_decomposition(x).map_err(|err| match err {
            Error::UniquenessViolated { witnesses, .. } => Outcome::Fail(format!(
                "{} has sharp-part candidates {}",
                e.element_name(x),
                names(e, witnesses.into_iter().collect())
            )),
            other => other.into(),
        })?;
    }
    Ok(())
}

/// The smallest sharp element above a finite element is finite, and the
/// map `u ↦ û` is monotone.
fn sharp_covers(e: &EffectAlgebra, _: &Limits) -> Check {
    atomic_lattice(e)?;
    distributive(e)?;
    let finite = e.finite_elements()?;
    let n = e.size();
    let hat = (0..n).map(|u| e.smallest_sharp_above(u)).collect::<Result<Vec<_>, _>>()?;
    for u in finite {
        ensure!(
            finite.contains(hat[u]),
            "smallest sharp element above {} is not finite",
            e.element_name(u)
        );
    }
    for u in 0..n {
        for v in e.up_set(u) {
            ensure!(
                e.leq(hat[u], hat[v]),
                "{} <= {} but their sharp covers are not ordered",
                e.element_name(u),
                e.element_name(v)
            );
        }
    }
    Ok(())
}

/// Zero together with the finite elements forms an ideal.
fn finite_elements_ideal(e: &EffectAlgebra, _: &Limits) -> Check {
    let lat = atomic_lattice(e)?;
    distributive(e)?;
    let f = e.finite_elements()?.with(e.zero());
    ensure!(e.is_lower_set(f), "finite elements {} are not a lower set", names(e, f));
    for a in f {
        for b in f {
            ensure!(
                f.contains(lat.join(a, b)),
                "{} ∨ {} is not finite",
                e.element_name(a),
                e.element_name(b)
            );
        }
    }
    Ok(())
}

/// The interval topology is compact Hausdorff and equals the order
/// topology.
fn interval_equals_order(e: &EffectAlgebra, limits: &Limits) -> Check {
    atomic_lattice(e)?;
    distributive(e)?;
    let i = interval_topology(e)?;
    let o = order_topology(e, limits)?;
    ensure!(i.is_hausdorff() && i.is_compact(), "interval topology is not compact Hausdorff");
    ensure!(
        i.equals(&o)?,
        "interval and order topologies differ at {}",
        e.element_name(first_open_difference(&i, &o).unwrap_or(0))
    );
    Ok(())
}

/// `x ↦ x ∨ y`, `x ↦ x ∧ y` and `x ↦ x'` are continuous for the order
/// topology.
fn lattice_ops_continuous(e: &EffectAlgebra, limits: &Limits) -> Check {
    let lat = lattice(e)?;
    o_continuous(e, limits)?;
    let t = order_topology(e, limits)?;
    for y in 0..e.size() {
        ensure!(unary_op_continuous(e, &t, |x| lat.join(x, y))?, "x ↦ x ∨ {}", e.element_name(y));
        ensure!(unary_op_continuous(e, &t, |x| lat.meet(x, y))?, "x ↦ x ∧ {}", e.element_name(y));
    }
    ensure!(unary_op_continuous(e, &t, |x| e.orthosupplement(x))?, "x ↦ x'");
    Ok(())
}

fn principal_iff_sharp(e: &EffectAlgebra, _: &Limits) -> Check {
    lattice(e)?;
    for x in 0..e.size() {
        let (p, s) = (e.is_principal_element(x), e.is_sharp(x)?);
        ensure!(p == s, "{}: principal={p}, sharp={s}", e.element_name(x));
    }
    Ok(())
}
