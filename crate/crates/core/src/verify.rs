//! Invariant and oracle suites run against one `(type, λ)` instance.
//!
//! Each suite reports how many individual checks it made and lists
//! counterexamples. A suite that hits a cap is reported as skipped for
//! resources; the others still run.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::caps::Caps;
use crate::dynkin::extended_diagram;
use crate::error::{Error, ErrorClass, Result};
use crate::faces::{self, face_lattice, f_polynomial};
use crate::nodeset::NodeSet;
use crate::oracle;
use crate::rootsys::{RootSystem, Weight};
use crate::weights::{self, weight_system, WeightSystem};
use crate::weyl;

/// Counterexamples kept per suite.
const MAX_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Strings,
    Chain,
    Descent,
    Keytheorem,
    Barycenter,
    Edges,
    Hull,
    Fvector,
    OrbitCount,
    Saturation,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Strings,
        Suite::Chain,
        Suite::Descent,
        Suite::Keytheorem,
        Suite::Barycenter,
        Suite::Edges,
        Suite::Hull,
        Suite::Fvector,
        Suite::OrbitCount,
        Suite::Saturation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Strings => "strings",
            Suite::Chain => "chain",
            Suite::Descent => "descent",
            Suite::Keytheorem => "keytheorem",
            Suite::Barycenter => "barycenter",
            Suite::Edges => "edges",
            Suite::Hull => "hull",
            Suite::Fvector => "fvector",
            Suite::OrbitCount => "orbit-count",
            Suite::Saturation => "saturation",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let key = if key == "f-vector" { "fvector".to_string() } else { key };
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == key)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub status: Status,
    pub checks: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub lambda: Weight,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    /// 0 when every suite passed, 3 when any failed, otherwise 2 when a
    /// suite was skipped for resources.
    pub fn exit_code(&self) -> i32 {
        if self.suites.iter().any(|s| s.status == Status::Fail) {
            3
        } else if self.suites.iter().any(|s| s.status == Status::Skipped) {
            2
        } else {
            0
        }
    }

    pub fn suite(&self, suite: Suite) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == suite)
    }
}

/// Accumulates checks and counterexamples for one suite.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    /// Records a library call that may report a theorem violation.
    fn expect<T>(&mut self, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => {
                self.checks += 1;
                Ok(Some(v))
            }
            Err(e) if e.class() == ErrorClass::Violation => {
                self.check(false, || e.to_string());
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

/// Shared per-instance state, built lazily.
struct Instance<'a> {
    rs: &'a RootSystem,
    lambda: &'a Weight,
    caps: Caps,
    ws: Option<WeightSystem>,
}

impl Instance<'_> {
    fn weights(&mut self) -> Result<&WeightSystem> {
        if self.ws.is_none() {
            self.ws = Some(weight_system(self.rs, self.lambda, self.caps.weights)?);
        }
        Ok(self.ws.as_ref().unwrap())
    }

    fn subsets(&self) -> impl Iterator<Item = NodeSet> {
        NodeSet::simple(self.rs.rank()).subsets()
    }
}

fn run_strings(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let rs = inst.rs;
    let ws = inst.weights()?.clone();
    for mu in ws.iter() {
        for alpha in rs.positive_roots() {
            if let Some(sum) = t.expect(weights::string_sum(rs, &ws, mu, alpha))? {
                t.check(num_traits::Zero::is_zero(&sum), || format!("string sum through {mu} along {alpha} is {sum}"));
            }
        }
        for i in 1..=rs.rank() {
            let s = weights::alpha_string(rs, &ws, mu, i)?;
            let (p, q) = (s.p as i64, s.q as i64);
            t.check(p - q == mu.pairing(i), || {
                format!("α_{i}-string through {mu} has p − q = {} but ⟨μ, α^∨⟩ = {}", p - q, mu.pairing(i))
            });
        }
    }
    Ok(())
}

fn run_chain(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let rs = inst.rs;
    let ws = inst.weights()?.clone();
    for subset in inst.subsets() {
        let bad = weights::chain_violations(rs, &ws, subset, 1)?;
        t.check(bad.is_empty(), || {
            let (mu, nu) = &bad[0];
            format!("I = {subset}: no descending path from {nu} to {mu} inside P_I")
        });
    }
    Ok(())
}

fn run_descent(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let (rs, lambda) = (inst.rs, inst.lambda);
    for w in weyl::enumerate_group(rs, inst.caps.group)? {
        let image = w.apply(rs, lambda);
        let diff = rs.scaled_root_coords(&(lambda - &image));
        let support: NodeSet = (1..=rs.rank()).filter(|&j| diff[j - 1] != 0).collect();
        let orbit = weyl::orbit(rs, support, lambda, inst.caps.orbit)?;
        t.check(orbit.contains(&image), || {
            format!("w = {:?}: wλ = {image} is not in W_J λ for J = {support}", w.word())
        });
    }
    Ok(())
}

fn run_keytheorem(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let (rs, lambda, caps) = (inst.rs, inst.lambda, inst.caps);
    let ws = inst.weights()?.clone();
    let diag = extended_diagram(rs, lambda)?;
    let n = rs.rank();
    for subset in inst.subsets() {
        let ok = oracle::supporting_check(rs, lambda, subset, &caps)?;
        t.check(ok, || format!("I = {subset}: maximizers of φ_I differ from the face vertices"));

        let face = faces::standard_parabolic_face(rs, lambda, subset)?;
        let least = face.least();
        let members = weights::face_weights(rs, &ws, subset)?;
        t.check(members.iter().all(|mu| weights::leq(rs, least, mu)), || {
            format!("I = {subset}: least weight {least} is not below all of P_I")
        });
        let verts = face.vertices(rs, lambda, caps.orbit)?;
        t.check(verts.contains(least), || format!("I = {subset}: least weight {least} is not a vertex"));

        let gap = rs.scaled_root_coords(&(lambda - least));
        let support: NodeSet = (1..=n).filter(|&j| gap[j - 1] > 0).collect();
        let nonneg = gap.iter().all(|&c| c >= 0);
        t.check(nonneg && support == diag.canonical_nodes(subset)?, || {
            format!("I = {subset}: λ − least has support {support}, expected {}", face.nodes())
        });

        if let Some(report) = t.expect(faces::face_span_check(rs, lambda, &ws, subset))? {
            t.check(report.dim == face.dim(), || format!("I = {subset}: span dimension {}", report.dim));
        }
    }
    let mut coordinate = BTreeSet::new();
    for i in 1..=n {
        t.expect(faces::is_facet(rs, lambda, i))?;
        coordinate.insert(faces::coordinate_face(rs, lambda, i)?.nodes());
    }
    if !lambda.is_zero() {
        t.check(coordinate.len() == n, || "coordinate faces are not pairwise distinct".into());
    }
    Ok(())
}

fn run_barycenter(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let (rs, lambda) = (inst.rs, inst.lambda);
    let ws = inst.weights()?.clone();
    for i in 1..=rs.rank() {
        t.expect(faces::barycenter_coordinate_face(rs, lambda, &ws, i))?;
    }
    for subset in inst.subsets() {
        t.expect(faces::barycenter_face(rs, lambda, &ws, subset))?;
    }
    Ok(())
}

fn run_edges(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let (rs, lambda) = (inst.rs, inst.lambda);
    t.expect(faces::edge_directions(rs, lambda))?;
    let Some(oh) = t.expect(oracle::orbit_hull(rs, lambda, &inst.caps))? else {
        return Ok(());
    };
    let (edges, bad) = oracle::edge_root_violations(rs, &oh);
    t.checks += edges;
    for (a, b) in bad {
        t.check(false, || format!("hull edge {a} – {b} is not parallel to a root"));
    }
    let faces = oh.hull().faces().len();
    let bad = oracle::span_by_roots_violations(rs, &oh);
    t.checks += faces;
    for f in bad {
        t.check(false, || format!("hull face {f:?} is not spanned by the roots it contains"));
    }
    Ok(())
}

fn run_hull(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let Some(r) = t.expect(oracle::parabolicity_check(inst.rs, inst.lambda, &inst.caps))? else {
        return Ok(());
    };
    t.checks += r.hull_faces;
    for f in &r.unmatched {
        t.check(false, || format!("hull face {f:?} is not a W-translate of a standard parabolic face"));
    }
    for (a, b) in &r.overlapping {
        t.check(false, || format!("canonical faces {a} and {b} are W-equivalent"));
    }
    t.check(r.hull_orbits == r.canonical_faces, || {
        format!("{} hull face orbits but {} canonical faces", r.hull_orbits, r.canonical_faces)
    });
    t.check(r.matched_classes == r.canonical_faces, || {
        format!("matching reached {} of {} canonical faces", r.matched_classes, r.canonical_faces)
    });
    Ok(())
}

/// `Σ_{k=-1}^{d} (−1)^k f_k`, with `f_{-1} = 1` for the empty face.
pub fn euler_characteristic(f: &[u128]) -> i128 {
    f.iter()
        .enumerate()
        .fold(-1i128, |acc, (k, &c)| if k % 2 == 0 { acc + c as i128 } else { acc - c as i128 })
}

fn run_fvector(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let (rs, lambda) = (inst.rs, inst.lambda);
    let Some(f) = t.expect(f_polynomial(rs, lambda))? else {
        return Ok(());
    };
    if f.len() > 1 {
        t.check(euler_characteristic(&f) == 0, || format!("f = {f:?} fails the Euler–Poincaré relation"));
    }
    t.check(f.last() == Some(&1), || format!("f = {f:?} does not end in 1"));
    let Some(oh) = t.expect(oracle::orbit_hull(rs, lambda, &inst.caps))? else {
        return Ok(());
    };
    let hull = oh.hull().f_vector();
    t.check(hull == f, || format!("hull f-vector {hull:?} differs from f-polynomial {f:?}"));
    Ok(())
}

fn run_orbit_count(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let (rs, lambda) = (inst.rs, inst.lambda);
    let diag = extended_diagram(rs, lambda)?;
    let grown: BTreeSet<NodeSet> = diag.enumerate_connected_with_zero().into_iter().collect();
    let filtered: BTreeSet<NodeSet> = diag.theorem_a_subsets().into_iter().collect();
    t.check(grown == filtered, || {
        format!("{} connected sets by growth, {} by filtering", grown.len(), filtered.len())
    });
    let canonical: BTreeSet<NodeSet> = inst
        .subsets()
        .map(|s| diag.canonical_nodes(s))
        .collect::<Result<_>>()?;
    t.check(canonical == grown, || {
        format!("{} canonical node sets over all I, {} connected sets", canonical.len(), grown.len())
    });
    let lattice = face_lattice(rs, lambda)?;
    t.check(lattice.len() == grown.len(), || format!("lattice has {} faces", lattice.len()));
    Ok(())
}

fn run_saturation(inst: &mut Instance, t: &mut Tally) -> Result<()> {
    let (rs, lambda, caps) = (inst.rs, inst.lambda, inst.caps);
    let bfs: BTreeSet<Weight> = inst.weights()?.iter().cloned().collect();
    let chamber = oracle::dominant_chamber_weights(rs, lambda, &caps)?;
    t.check(bfs == chamber, || {
        format!("string descent gives {} weights, dominant chambers give {}", bfs.len(), chamber.len())
    });
    if rs.integral_root_coords(lambda).is_some() {
        let oh = oracle::orbit_hull(rs, lambda, &caps)?;
        if let Some(points) = oracle::hull_lattice_points(rs, &oh, &caps)? {
            t.check(points == bfs, || {
                format!("hull contains {} lattice points, weight system has {}", points.len(), bfs.len())
            });
        }
    }
    Ok(())
}

fn run_one(inst: &mut Instance, suite: Suite) -> Result<SuiteReport> {
    let mut t = Tally::default();
    let outcome = match suite {
        Suite::Strings => run_strings(inst, &mut t),
        Suite::Chain => run_chain(inst, &mut t),
        Suite::Descent => run_descent(inst, &mut t),
        Suite::Keytheorem => run_keytheorem(inst, &mut t),
        Suite::Barycenter => run_barycenter(inst, &mut t),
        Suite::Edges => run_edges(inst, &mut t),
        Suite::Hull => run_hull(inst, &mut t),
        Suite::Fvector => run_fvector(inst, &mut t),
        Suite::OrbitCount => run_orbit_count(inst, &mut t),
        Suite::Saturation => run_saturation(inst, &mut t),
    };
    let (status, note) = match outcome {
        Ok(()) if t.failed == 0 => (Status::Pass, None),
        Ok(()) => (Status::Fail, Some(format!("{} of {} checks failed", t.failed, t.checks))),
        Err(e) => match e.class() {
            ErrorClass::Resource => (Status::Skipped, Some(e.to_string())),
            ErrorClass::Violation => {
                t.failures.push(e.to_string());
                (Status::Fail, None)
            }
            ErrorClass::Usage => return Err(e),
        },
    };
    Ok(SuiteReport {
        suite,
        status,
        checks: t.checks,
        failures: t.failures,
        note,
    })
}

/// Runs `suites` (all of them when empty) in the canonical order.
pub fn verify(rs: &RootSystem, lambda: &Weight, suites: &[Suite], caps: &Caps) -> Result<VerifyReport> {
    rs.check_dominant(lambda)?;
    let selected: BTreeSet<Suite> = if suites.is_empty() {
        Suite::ALL.into_iter().collect()
    } else {
        suites.iter().copied().collect()
    };
    let mut inst = Instance {
        rs,
        lambda,
        caps: *caps,
        ws: None,
    };
    let mut reports = Vec::new();
    for suite in selected {
        reports.push(run_one(&mut inst, suite)?);
    }
    Ok(VerifyReport {
        schema: 1,
        kind: rs.kind().to_string(),
        rank: rs.rank(),
        lambda: lambda.clone(),
        passed: reports.iter().all(|r| r.status == Status::Pass),
        suites: reports,
    })
}

/// Parses a comma-separated suite list; `all` or an empty list selects
/// every suite.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty() && s.trim() != "all")
        .map(|s| s.parse().map_err(Error::Precondition))
        .collect()
}
