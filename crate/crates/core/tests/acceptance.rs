//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p weightpoly-core --test acceptance`.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;

use weightpoly::dynkin::extended_diagram;
use weightpoly::faces::{
    barycenter_coordinate_face, barycenter_face, edge_directions, f_polynomial, face_lattice, face_span_check,
    standard_parabolic_face,
};
use weightpoly::oracle::{
    dominant_chamber_weights, edge_root_violations, hull_lattice_points, orbit_hull, parabolicity_check,
    span_by_roots_violations, supporting_check,
};
use weightpoly::weights::{chain_violations, face_weights, leq, string_sum, weight_system};
use weightpoly::weyl::{enumerate_group, orbit};
use weightpoly::{root_system, CartanType, Caps, ErrorClass, NodeSet, RootSystem, Weight};

type Outcome = Result<String, String>;

/// Number, name, check and time budget in seconds.
type Criterion = (u32, &'static str, fn() -> Outcome, Option<u64>);

fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

/// The hull instances with their f-vectors.
fn hull_instances() -> Vec<(RootSystem, Weight, Vec<u128>)> {
    vec![
        (root_system('A', 2).unwrap(), w(&[1, 1]), vec![6, 6, 1]),
        (root_system('A', 2).unwrap(), w(&[1, 0]), vec![3, 3, 1]),
        (root_system('A', 3).unwrap(), w(&[1, 1, 1]), vec![24, 36, 14, 1]),
        (root_system('B', 2).unwrap(), w(&[1, 1]), vec![8, 8, 1]),
        (root_system('G', 2).unwrap(), w(&[1, 1]), vec![12, 12, 1]),
    ]
}

fn zero_one_patterns(n: usize) -> impl Iterator<Item = Weight> {
    (0..(1u64 << n)).map(move |bits| Weight::new((0..n).map(|i| ((bits >> i) & 1) as i64).collect()))
}

/// Every type of rank ≤ 4 with λ over all 0/1 patterns plus `(2,1,…,1)`.
fn panel() -> Vec<(RootSystem, Weight)> {
    let mut out = Vec::new();
    for kind in CartanType::all_up_to(4) {
        let n = kind.rank();
        let rs = RootSystem::new(kind);
        for lambda in zero_one_patterns(n) {
            out.push((rs.clone(), lambda));
        }
        let mut skew = vec![1; n];
        skew[0] = 2;
        out.push((rs, Weight::new(skew)));
    }
    out
}

fn all_subsets(rs: &RootSystem) -> impl Iterator<Item = NodeSet> {
    NodeSet::simple(rs.rank()).subsets()
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Err(msg())
    } else {
        Ok(())
    }
}

fn fvector_vs_geometry() -> Outcome {
    let caps = Caps::default();
    for (rs, lambda, expected) in hull_instances() {
        let f = f_polynomial(&rs, &lambda).map_err(|e| e.to_string())?;
        let hull = orbit_hull(&rs, &lambda, &caps).map_err(|e| e.to_string())?.hull().f_vector();
        fail_if(f != hull || f != expected, || {
            format!("{} {lambda}: f-polynomial {f:?}, hull {hull:?}, expected {expected:?}", rs.kind())
        })?;
    }
    Ok("5 instances".into())
}

fn orbit_count_identity() -> Outcome {
    let mut instances = 0;
    for kind in CartanType::all_up_to(5) {
        let rs = RootSystem::new(kind);
        for lambda in zero_one_patterns(rs.rank()) {
            let diag = extended_diagram(&rs, &lambda).map_err(|e| e.to_string())?;
            let grown: BTreeSet<NodeSet> = diag.enumerate_connected_with_zero().into_iter().collect();
            let filtered: BTreeSet<NodeSet> = diag.theorem_a_subsets().into_iter().collect();
            let canonical: BTreeSet<NodeSet> = all_subsets(&rs).map(|s| diag.canonical_nodes(s).unwrap()).collect();
            let lattice = face_lattice(&rs, &lambda).map_err(|e| e.to_string())?.len();
            fail_if(
                grown != filtered || grown != canonical || lattice != grown.len(),
                || {
                    format!(
                        "{kind} {lambda}: grown {}, filtered {}, canonical {}, lattice {lattice}",
                        grown.len(),
                        filtered.len(),
                        canonical.len()
                    )
                },
            )?;
            instances += 1;
        }
    }
    Ok(format!("{instances} instances"))
}

fn keytheorem_suite() -> Outcome {
    let caps = Caps::default();
    let mut checks = 0;
    for (rs, lambda) in panel() {
        let ws = weight_system(&rs, &lambda, caps.weights).map_err(|e| e.to_string())?;
        let diag = extended_diagram(&rs, &lambda).unwrap();
        let tag = format!("{} {lambda}", rs.kind());
        for subset in all_subsets(&rs) {
            let ok = supporting_check(&rs, &lambda, subset, &caps).map_err(|e| e.to_string())?;
            fail_if(!ok, || format!("{tag} I = {subset}: supporting functional"))?;

            let face = standard_parabolic_face(&rs, &lambda, subset).map_err(|e| e.to_string())?;
            let least = face.least();
            let members = face_weights(&rs, &ws, subset).unwrap();
            fail_if(!members.iter().all(|mu| leq(&rs, least, mu)), || {
                format!("{tag} I = {subset}: least {least} not below P_I")
            })?;
            let vertices = face.vertices(&rs, &lambda, caps.orbit).unwrap();
            fail_if(!vertices.contains(least), || format!("{tag} I = {subset}: least not a vertex"))?;

            let gap = rs.scaled_root_coords(&(&lambda - least));
            let support: NodeSet = (1..=rs.rank()).filter(|&j| gap[j - 1] > 0).collect();
            let canonical = diag.canonical_nodes(subset).unwrap();
            fail_if(gap.iter().any(|&c| c < 0) || support != canonical, || {
                format!("{tag} I = {subset}: support {support} vs canonical {canonical}")
            })?;

            let span = face_span_check(&rs, &lambda, &ws, subset).map_err(|e| format!("{tag}: {e}"))?;
            fail_if(span.dim != canonical.len(), || format!("{tag} I = {subset}: span dim {}", span.dim))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} (λ, I) pairs"))
}

fn parabolicity() -> Outcome {
    let caps = Caps::default();
    let mut faces = 0;
    for (rs, lambda, _) in hull_instances() {
        let r = parabolicity_check(&rs, &lambda, &caps).map_err(|e| e.to_string())?;
        fail_if(!r.passed(), || format!("{} {lambda}: {r:?}", rs.kind()))?;
        faces += r.hull_faces;
    }
    Ok(format!("{faces} hull faces matched"))
}

fn edges_and_spans() -> Outcome {
    let caps = Caps::default();
    let (mut edges, mut spans) = (0, 0);
    for (rs, lambda, _) in hull_instances() {
        edge_directions(&rs, &lambda).map_err(|e| e.to_string())?;
        let oh = orbit_hull(&rs, &lambda, &caps).map_err(|e| e.to_string())?;
        let (n, bad) = edge_root_violations(&rs, &oh);
        fail_if(!bad.is_empty(), || format!("{} {lambda}: edges {bad:?}", rs.kind()))?;
        let bad = span_by_roots_violations(&rs, &oh);
        fail_if(!bad.is_empty(), || format!("{} {lambda}: faces {bad:?}", rs.kind()))?;
        edges += n;
        spans += oh.hull().faces().len();
    }
    Ok(format!("{edges} edges, {spans} face spans"))
}

fn barycenters() -> Outcome {
    let caps = Caps::default();
    let mut checks = 0;
    for (rs, lambda) in panel() {
        let ws = weight_system(&rs, &lambda, caps.weights).map_err(|e| e.to_string())?;
        for i in 1..=rs.rank() {
            barycenter_coordinate_face(&rs, &lambda, &ws, i).map_err(|e| format!("{} {lambda}: {e}", rs.kind()))?;
            checks += 1;
        }
        for subset in all_subsets(&rs) {
            barycenter_face(&rs, &lambda, &ws, subset).map_err(|e| format!("{} {lambda}: {e}", rs.kind()))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} identities"))
}

fn strings_and_chains() -> Outcome {
    let caps = Caps::default();
    let (mut strings, mut chains) = (0, 0);
    for (rs, lambda) in panel() {
        let ws = weight_system(&rs, &lambda, caps.weights).map_err(|e| e.to_string())?;
        let simple: Vec<Weight> = (1..=rs.rank()).map(|i| rs.simple_root(i)).collect();
        for mu in ws.iter() {
            for alpha in &simple {
                let s = string_sum(&rs, &ws, mu, alpha).map_err(|e| e.to_string())?;
                fail_if(!s.is_zero(), || format!("{} {lambda}: string sum at {mu} along {alpha} is {s}", rs.kind()))?;
                strings += 1;
            }
        }
        for subset in all_subsets(&rs) {
            let bad = chain_violations(&rs, &ws, subset, 1).map_err(|e| e.to_string())?;
            fail_if(!bad.is_empty(), || format!("{} {lambda} I = {subset}: {bad:?}", rs.kind()))?;
            chains += 1;
        }
    }
    Ok(format!("{strings} strings, {chains} step graphs"))
}

fn descent() -> Outcome {
    let caps = Caps::default();
    let mut checks = 0;
    for (rs, lambda) in panel() {
        if rs.kind().weyl_order() > 2_000 {
            continue;
        }
        let group = enumerate_group(&rs, caps.group).map_err(|e| e.to_string())?;
        let mut orbits: HashMap<NodeSet, BTreeSet<Weight>> = HashMap::new();
        for g in &group {
            let image = g.apply(&rs, &lambda);
            let gap = rs.scaled_root_coords(&(&lambda - &image));
            let support: NodeSet = (1..=rs.rank()).filter(|&j| gap[j - 1] != 0).collect();
            let sub = orbits
                .entry(support)
                .or_insert_with(|| orbit(&rs, support, &lambda, caps.orbit).unwrap());
            fail_if(!sub.contains(&image), || {
                format!("{} {lambda}: w = {:?}, J = {support}", rs.kind(), g.word())
            })?;
            checks += 1;
        }
    }
    Ok(format!("{checks} (λ, w) pairs"))
}

fn cross_construction() -> Outcome {
    let caps = Caps::default();
    let (mut agree, mut lattice) = (0, 0);
    for (rs, lambda) in panel() {
        let bfs: BTreeSet<Weight> = weight_system(&rs, &lambda, caps.weights)
            .map_err(|e| e.to_string())?
            .iter()
            .cloned()
            .collect();
        let chamber = dominant_chamber_weights(&rs, &lambda, &caps).map_err(|e| e.to_string())?;
        fail_if(bfs != chamber, || format!("{} {lambda}: {} vs {} weights", rs.kind(), bfs.len(), chamber.len()))?;
        agree += 1;
        if rs.integral_root_coords(&lambda).is_none() {
            continue;
        }
        let oh = match orbit_hull(&rs, &lambda, &caps) {
            Ok(oh) => oh,
            Err(e) if e.class() == ErrorClass::Resource => continue,
            Err(e) => return Err(e.to_string()),
        };
        let points = hull_lattice_points(&rs, &oh, &caps)
            .map_err(|e| e.to_string())?
            .expect("λ is in the root lattice");
        fail_if(points != bfs, || format!("{} {lambda}: hull has {} lattice points", rs.kind(), points.len()))?;
        lattice += 1;
    }
    fail_if(lattice == 0, || "no in-cap root-lattice instance".into())?;
    Ok(format!("{agree} constructions agree, {lattice} hull ∩ lattice checks"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "f-polynomial vs hull f-vector", fvector_vs_geometry, Some(30)),
        (2, "orbit-count identity", orbit_count_identity, Some(60)),
        (3, "face structure of standard parabolic faces", keytheorem_suite, Some(300)),
        (4, "parabolicity of hull faces", parabolicity, Some(120)),
        (5, "edge-root parallelism and root spans", edges_and_spans, Some(60)),
        (6, "barycenter identities", barycenters, None),
        (7, "string sums and chain connectivity", strings_and_chains, None),
        (8, "descent property", descent, Some(120)),
        (9, "cross-construction agreement", cross_construction, None),
    ];
    let mut failed = 0;
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {}s budget", limit.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {n} [{name}]: {status} ({:.2}s) {detail}", elapsed.as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
