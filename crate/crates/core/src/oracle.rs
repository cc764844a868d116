//! Geometric cross-checks that share no code path with the diagram
//! combinatorics: an exact brute-force convex hull, supporting functionals,
//! and direct constructions of the weight system.
//!
//! Points are embedded by their simple-root coordinates. Hull combinatorics
//! is affine invariant, so facet search and side tests use plain coordinate
//! arithmetic there; [`form`] recovers the invariant inner product when it is
//! needed.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::faces::face_lattice;
use crate::linalg::{self, EchelonBasis, Rational};
use crate::nodeset::NodeSet;
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{self, enumerate_group};

/// Simple-root coordinates of `μ`.
pub fn embed(rs: &RootSystem, mu: &Weight) -> Vec<Rational> {
    rs.root_coords(mu)
}

/// The invariant form on embedded vectors: `xᵀ G y` with `G` the Gram matrix
/// of the simple roots.
pub fn form(rs: &RootSystem, x: &[Rational], y: &[Rational]) -> Rational {
    let gram = rs.gram_matrix();
    let mut acc = Rational::zero();
    for (i, row) in gram.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        for (j, &g) in row.iter().enumerate() {
            if g != 0 {
                acc += &x[i] * &y[j] * Rational::from_integer(g.into());
            }
        }
    }
    acc
}

/// `normal · x ≤ offset` on the polytope, in local coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Halfspace {
    fn slack(&self, x: &[Rational]) -> Rational {
        &self.offset - linalg::dot(&self.normal, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullFace {
    pub dim: usize,
    /// Indices into [`HullFaceLattice::vertices`], ascending.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct HullFaceLattice {
    vertices: Vec<Vec<Rational>>,
    sources: Vec<usize>,
    faces: Vec<HullFace>,
    dim: usize,
    origin: Vec<Rational>,
    directions: EchelonBasis,
    pivots: Vec<usize>,
    facets: Vec<Halfspace>,
}

impl HullFaceLattice {
    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// For each vertex, its index in the input point list.
    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    /// Nonempty faces sorted by dimension, then vertex list; the last one is
    /// the polytope itself.
    pub fn faces(&self) -> &[HullFace] {
        &self.faces
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Number of faces of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<u128> {
        let mut f = vec![0u128; self.dim + 1];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        let upper: BTreeSet<usize> = self.faces[b].vertices.iter().copied().collect();
        self.faces[a].vertices.iter().all(|v| upper.contains(v))
    }

    fn local(&self, p: &[Rational]) -> Vec<Rational> {
        self.pivots.iter().map(|&c| &p[c] - &self.origin[c]).collect()
    }

    /// Whether `p` lies in the closed polytope.
    pub fn contains(&self, p: &[Rational]) -> bool {
        let diff = linalg::sub(p, &self.origin);
        if !self.directions.contains(&diff) {
            return false;
        }
        let x = self.local(p);
        self.facets.iter().all(|h| !h.slack(&x).is_negative())
    }
}

fn for_each_combination(m: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, m: usize, k: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let need = k - buf.len();
        for i in start..=m - need {
            buf.push(i);
            go(i + 1, m, k, buf, f);
            buf.pop();
        }
    }
    if k <= m {
        go(0, m, k, &mut Vec::with_capacity(k), f);
    }
}

/// Affine rank of a point list.
fn affine_dim(points: &[&Vec<Rational>]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| linalg::sub(p, first)).collect();
    linalg::rank(&diffs)
}

/// Exhaustive exact convex hull of a small point set.
///
/// Every affinely independent `d`-subset spans a candidate hyperplane in the
/// affine hull; it is a facet if all points lie on one side. Faces are the
/// closure of facet vertex sets under intersection, plus the polytope.
pub fn brute_force_hull(points: &[Vec<Rational>], caps: &Caps) -> Result<HullFaceLattice> {
    let Some(first) = points.first() else {
        return Err(Error::Precondition("hull of an empty point set".into()));
    };
    let ambient = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != ambient) {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: p.len(),
        });
    }
    let mut seen = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        seen.entry(p.clone()).or_insert(i);
    }
    let mut unique: Vec<(usize, Vec<Rational>)> = seen.into_iter().map(|(p, i)| (i, p)).collect();
    unique.sort_by_key(|(i, _)| *i);
    if unique.len() > caps.hull_vertices {
        return Err(Error::ResourceLimit {
            what: "hull points",
            cap: caps.hull_vertices,
        });
    }

    let origin = unique[0].1.clone();
    let diffs: Vec<Vec<Rational>> = unique.iter().map(|(_, p)| linalg::sub(p, &origin)).collect();
    let mut directions = EchelonBasis::new(ambient);
    for d in &diffs {
        directions.insert(d);
    }
    let pivots = linalg::pivot_columns(&diffs, ambient);
    let dim = pivots.len();
    if dim > caps.hull_dim {
        return Err(Error::ResourceLimit {
            what: "hull dimension",
            cap: caps.hull_dim,
        });
    }
    let local: Vec<Vec<Rational>> = diffs
        .iter()
        .map(|d| pivots.iter().map(|&c| d[c].clone()).collect())
        .collect();

    let mut facets: Vec<Halfspace> = Vec::new();
    let mut facet_points: Vec<Vec<usize>> = Vec::new();
    if dim > 0 {
        let mut tried: std::collections::HashSet<Halfspace> = std::collections::HashSet::new();
        for_each_combination(local.len(), dim, &mut |combo| {
            let rows: Vec<Vec<Rational>> = combo
                .iter()
                .map(|&k| {
                    let mut r = local[k].clone();
                    r.push(-Rational::from_integer(1.into()));
                    r
                })
                .collect();
            let ns = linalg::nullspace(&rows, dim + 1);
            if ns.len() != 1 {
                return;
            }
            let h = &ns[0];
            let lead = h[..dim].iter().find(|x| !x.is_zero()).cloned().expect("nonzero normal");
            let mut plane = Halfspace {
                normal: h[..dim].iter().map(|x| x / &lead).collect(),
                offset: &h[dim] / &lead,
            };
            if !tried.insert(plane.clone()) {
                return;
            }
            let slacks: Vec<Rational> = local.iter().map(|x| plane.slack(x)).collect();
            let below = slacks.iter().all(|s| !s.is_negative());
            let above = slacks.iter().all(|s| !s.is_positive());
            if !(below || above) {
                return;
            }
            if !below {
                plane = Halfspace {
                    normal: plane.normal.iter().map(|x| -x).collect(),
                    offset: -plane.offset,
                };
            }
            facet_points.push((0..local.len()).filter(|&k| slacks[k].is_zero()).collect());
            facets.push(plane);
        });
    }

    // A point is a vertex iff the facets through it meet only there.
    let is_vertex: Vec<bool> = (0..local.len())
        .map(|p| {
            if dim == 0 {
                return true;
            }
            let mut common: Option<BTreeSet<usize>> = None;
            for fp in facet_points.iter().filter(|fp| fp.contains(&p)) {
                let s: BTreeSet<usize> = fp.iter().copied().collect();
                common = Some(match common {
                    None => s,
                    Some(c) => c.intersection(&s).copied().collect(),
                });
            }
            common.is_some_and(|c| c.len() == 1)
        })
        .collect();
    let vertex_of: Vec<Option<usize>> = {
        let mut next = 0;
        is_vertex
            .iter()
            .map(|&v| {
                v.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let vertices: Vec<Vec<Rational>> = (0..local.len())
        .filter(|&p| is_vertex[p])
        .map(|p| unique[p].1.clone())
        .collect();
    let sources: Vec<usize> = (0..local.len()).filter(|&p| is_vertex[p]).map(|p| unique[p].0).collect();

    let facet_sets: Vec<BTreeSet<usize>> = facet_points
        .iter()
        .map(|fp| fp.iter().filter_map(|&p| vertex_of[p]).collect())
        .collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<BTreeSet<usize>> = Vec::new();
    for s in &facet_sets {
        if found.insert(s.iter().copied().collect()) {
            queue.push(s.clone());
        }
    }
    while let Some(face) = queue.pop() {
        for s in &facet_sets {
            let meet: BTreeSet<usize> = face.intersection(s).copied().collect();
            if !meet.is_empty() && found.insert(meet.iter().copied().collect()) {
                queue.push(meet);
            }
        }
    }
    found.insert((0..vertices.len()).collect());
    let mut faces: Vec<HullFace> = found
        .into_iter()
        .map(|vs| {
            let pts: Vec<&Vec<Rational>> = vs.iter().map(|&v| &vertices[v]).collect();
            HullFace {
                dim: affine_dim(&pts),
                vertices: vs,
            }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));

    Ok(HullFaceLattice {
        vertices,
        sources,
        faces,
        dim,
        origin,
        directions,
        pivots,
        facets,
    })
}

/// Whether the maximizers of `φ_I(μ) = Σ_{i∈I} c_i(μ)` over `Wλ` are exactly
/// the vertices `W_S λ` of the standard parabolic face.
pub fn supporting_check(rs: &RootSystem, lambda: &Weight, subset: NodeSet, caps: &Caps) -> Result<bool> {
    rs.check_dominant(lambda)?;
    weyl::check_subset(rs, subset)?;
    let diag = crate::dynkin::extended_diagram(rs, lambda)?;
    let canonical = diag.canonical_nodes(subset)?;
    let all = weyl::orbit(rs, NodeSet::simple(rs.rank()), lambda, caps.orbit)?;
    let phi = |mu: &Weight| -> i64 {
        let c = rs.scaled_root_coords(mu);
        subset.iter().map(|i| c[i - 1]).sum()
    };
    let best = all.iter().map(phi).max().expect("orbit is nonempty");
    let argmax: BTreeSet<Weight> = all.iter().filter(|mu| phi(mu) == best).cloned().collect();
    Ok(argmax == weyl::orbit(rs, canonical, lambda, caps.orbit)?)
}

/// `Wλ` together with its brute-force hull.
#[derive(Debug, Clone)]
pub struct OrbitHull {
    orbit: Vec<Weight>,
    hull: HullFaceLattice,
}

impl OrbitHull {
    pub fn orbit(&self) -> &[Weight] {
        &self.orbit
    }

    pub fn hull(&self) -> &HullFaceLattice {
        &self.hull
    }

    /// The weight at hull vertex `v`.
    pub fn vertex_weight(&self, v: usize) -> &Weight {
        &self.orbit[self.hull.sources()[v]]
    }

    pub fn face_weights(&self, face: &HullFace) -> Vec<Weight> {
        face.vertices.iter().map(|&v| self.vertex_weight(v).clone()).collect()
    }
}

pub fn orbit_hull(rs: &RootSystem, lambda: &Weight, caps: &Caps) -> Result<OrbitHull> {
    rs.check_dominant(lambda)?;
    let orbit: Vec<Weight> = weyl::orbit(rs, NodeSet::simple(rs.rank()), lambda, caps.orbit)?
        .into_iter()
        .collect();
    if orbit.len() > caps.hull_vertices {
        return Err(Error::ResourceLimit {
            what: "hull points",
            cap: caps.hull_vertices,
        });
    }
    let points: Vec<Vec<Rational>> = orbit.iter().map(|mu| embed(rs, mu)).collect();
    let hull = brute_force_hull(&points, caps)?;
    if hull.vertices().len() != orbit.len() {
        return Err(Error::violation(format!(
            "only {} of {} orbit points are hull vertices",
            hull.vertices().len(),
            orbit.len()
        )));
    }
    Ok(OrbitHull { orbit, hull })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicityReport {
    pub hull_faces: usize,
    pub matched: usize,
    /// Vertex weights of hull faces that are no `W`-translate of a canonical face.
    pub unmatched: Vec<Vec<Weight>>,
    /// `W`-orbits of hull faces, computed from the action on vertex sets.
    pub hull_orbits: usize,
    /// Distinct canonical faces hit by the matching.
    pub matched_classes: usize,
    pub canonical_faces: usize,
    /// Pairs of canonical faces with a common `W`-translate.
    pub overlapping: Vec<(NodeSet, NodeSet)>,
}

impl ParabolicityReport {
    pub fn passed(&self) -> bool {
        self.unmatched.is_empty()
            && self.overlapping.is_empty()
            && self.hull_orbits == self.canonical_faces
            && self.matched_classes == self.canonical_faces
    }
}

/// Matches every hull face of `conv(Wλ)` to a `W`-translate of a standard
/// parabolic face and counts the `W`-orbits of hull faces.
pub fn parabolicity_check(rs: &RootSystem, lambda: &Weight, caps: &Caps) -> Result<ParabolicityReport> {
    let oh = orbit_hull(rs, lambda, caps)?;
    let group = enumerate_group(rs, caps.group)?;
    let lattice = face_lattice(rs, lambda)?;
    let index: HashMap<&Weight, usize> = (0..oh.hull.vertices().len()).map(|v| (oh.vertex_weight(v), v)).collect();
    let to_vertex_set = |ws: &mut dyn Iterator<Item = Weight>| -> Option<Vec<usize>> {
        let mut vs: Vec<usize> = ws.map(|w| index.get(&w).copied()).collect::<Option<_>>()?;
        vs.sort_unstable();
        Some(vs)
    };

    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut overlapping = BTreeSet::new();
    for (id, face) in lattice.faces().iter().enumerate() {
        let verts: Vec<Weight> = face.vertices(rs, lambda, caps.orbit)?.into_iter().collect();
        for w in &group {
            let Some(image) = to_vertex_set(&mut verts.iter().map(|mu| w.apply(rs, mu))) else {
                return Err(Error::violation(format!("a W-translate of F_{} leaves the orbit", face.nodes())));
            };
            let prev = *class_of.entry(image).or_insert(id);
            if prev != id {
                overlapping.insert((lattice.faces()[prev].nodes(), face.nodes()));
            }
        }
    }

    let faces = oh.hull.faces();
    let mut unmatched = Vec::new();
    let mut classes = BTreeSet::new();
    for f in faces {
        match class_of.get(&f.vertices) {
            Some(&c) => {
                classes.insert(c);
            }
            None => unmatched.push(oh.face_weights(f)),
        }
    }

    // Orbits of hull faces under the simple reflections, by union-find.
    let face_index: HashMap<&Vec<usize>, usize> = faces.iter().enumerate().map(|(k, f)| (&f.vertices, k)).collect();
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (k, f) in faces.iter().enumerate() {
        for i in 1..=rs.rank() {
            let image = to_vertex_set(&mut f.vertices.iter().map(|&v| rs.reflect(i, oh.vertex_weight(v))));
            let Some(target) = image.as_ref().and_then(|vs| face_index.get(vs)) else {
                return Err(Error::violation(format!(
                    "s_{i} maps a hull face onto a vertex set that is not a face"
                )));
            };
            let (a, b) = (root(&mut parent, k), root(&mut parent, *target));
            parent[a] = b;
        }
    }
    let hull_orbits = (0..faces.len()).filter(|&k| root(&mut parent, k) == k).count();

    Ok(ParabolicityReport {
        hull_faces: faces.len(),
        matched: faces.len() - unmatched.len(),
        unmatched,
        hull_orbits,
        matched_classes: classes.len(),
        canonical_faces: lattice.len(),
        overlapping: overlapping.into_iter().collect(),
    })
}

/// Hull edges whose direction is not a multiple of any root.
pub fn edge_root_violations(rs: &RootSystem, oh: &OrbitHull) -> (usize, Vec<(Weight, Weight)>) {
    let mut bad = Vec::new();
    let edges: Vec<&HullFace> = oh.hull.faces().iter().filter(|f| f.dim == 1).collect();
    for e in &edges {
        let a = oh.vertex_weight(e.vertices[0]);
        let b = oh.vertex_weight(e.vertices[1]);
        if rs.parallel_root(&embed(rs, &(a - b))).is_none() {
            bad.push((a.clone(), b.clone()));
        }
    }
    (edges.len(), bad)
}

/// Hull faces whose direction space is not spanned by the roots inside it.
pub fn span_by_roots_violations(rs: &RootSystem, oh: &OrbitHull) -> Vec<Vec<Weight>> {
    let n = rs.rank();
    let roots: Vec<Vec<Rational>> = rs
        .positive_root_coords()
        .iter()
        .map(|r| linalg::to_rational_vec(r))
        .collect();
    oh.hull
        .faces()
        .iter()
        .filter(|face| {
            let ws = oh.face_weights(face);
            let mut span = EchelonBasis::new(n);
            for mu in &ws[1..] {
                span.insert(&embed(rs, &(mu - &ws[0])));
            }
            let mut inside = EchelonBasis::new(n);
            for r in roots.iter().filter(|r| span.contains(r)) {
                inside.insert(r);
            }
            inside.rank() != span.rank()
        })
        .map(|face| oh.face_weights(face))
        .collect()
}

/// `P(λ)` as the union of `W`-orbits of the dominant weights `μ ≤ λ`.
///
/// Dominant weights have nonnegative root coordinates, so `λ − μ = Σ k_i α_i`
/// with `0 ≤ k_i ≤ c_i(λ)`.
pub fn dominant_chamber_weights(rs: &RootSystem, lambda: &Weight, caps: &Caps) -> Result<BTreeSet<Weight>> {
    rs.check_dominant(lambda)?;
    let n = rs.rank();
    let bounds: Vec<i64> = rs
        .scaled_root_coords(lambda)
        .iter()
        .map(|c| c.div_euclid(rs.root_denominator()))
        .collect();
    let simple: Vec<Weight> = (1..=n).map(|i| rs.simple_root(i)).collect();
    let all = NodeSet::simple(n);
    let mut out = BTreeSet::new();
    let mut k = vec![0i64; n];
    loop {
        let mut mu = lambda.clone();
        for (i, &ki) in k.iter().enumerate() {
            if ki != 0 {
                mu = &mu - &(ki * &simple[i]);
            }
        }
        if mu.is_dominant() && !out.contains(&mu) {
            out.extend(weyl::orbit(rs, all, &mu, caps.orbit)?);
            if out.len() > caps.weights {
                return Err(Error::ResourceLimit {
                    what: "weight system",
                    cap: caps.weights,
                });
            }
        }
        let Some(pos) = (0..n).find(|&i| k[i] < bounds[i]) else {
            break;
        };
        k[pos] += 1;
        for ki in &mut k[..pos] {
            *ki = 0;
        }
    }
    Ok(out)
}

/// `conv(Wλ) ∩ (λ + Q)` for `λ` in the root lattice `Q`; `None` otherwise.
pub fn hull_lattice_points(rs: &RootSystem, oh: &OrbitHull, caps: &Caps) -> Result<Option<BTreeSet<Weight>>> {
    let n = rs.rank();
    let coords: Vec<Vec<i64>> = match oh
        .orbit()
        .iter()
        .map(|mu| rs.integral_root_coords(mu))
        .collect::<Option<Vec<_>>>()
    {
        Some(c) => c,
        None => return Ok(None),
    };
    let lo: Vec<i64> = (0..n).map(|i| coords.iter().map(|c| c[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|i| coords.iter().map(|c| c[i]).max().unwrap()).collect();
    let volume = (0..n).try_fold(1usize, |acc, i| acc.checked_mul((hi[i] - lo[i] + 1) as usize));
    if volume.is_none_or(|v| v > caps.weights) {
        return Err(Error::ResourceLimit {
            what: "lattice box",
            cap: caps.weights,
        });
    }
    let mut out = BTreeSet::new();
    let mut r = lo.clone();
    loop {
        if oh.hull.contains(&linalg::to_rational_vec(&r)) {
            out.insert(rs.from_root_coords(&r));
        }
        let Some(pos) = (0..n).find(|&i| r[i] < hi[i]) else {
            break;
        };
        r[pos] += 1;
        r[..pos].copy_from_slice(&lo[..pos]);
    }
    Ok(Some(out))
}
