//! Standard parabolic faces of the weight polytope, keyed by their canonical
//! node sets, and everything built from them: the face lattice, the
//! cross-section lattice, barycenters and the f-polynomial.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::dynkin::{extended_diagram, ExtendedDiagram};
use crate::error::{Error, Result};
use crate::linalg::{self, rat, Rational};
use crate::nodeset::NodeSet;
use crate::rootsys::{RootSystem, Weight};
use crate::weights::{face_weights, WeightSystem};
use crate::weyl::{self, check_subset, least_orbit_element, parabolic_order};

/// A standard parabolic face `F_I`, identified by `S = Ī⁰`.
///
/// The vertex set is `W_S · λ`; it is counted eagerly and enumerated on
/// demand by [`CanonicalFace::vertices`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalFace {
    nodes: NodeSet,
    least: Weight,
    dim: usize,
    vertex_count: u128,
}

impl CanonicalFace {
    pub fn nodes(&self) -> NodeSet {
        self.nodes
    }

    /// `u_0 λ`, the least weight of the face.
    pub fn least(&self) -> &Weight {
        &self.least
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> u128 {
        self.vertex_count
    }

    pub fn vertices(&self, rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<BTreeSet<Weight>> {
        weyl::orbit(rs, self.nodes, lambda, cap)
    }
}

/// The face with canonical node set `nodes`, which must already be
/// canonical (`nodes ∪ {0}` connected).
pub fn face_from_nodes(rs: &RootSystem, lambda: &Weight, nodes: NodeSet) -> Result<CanonicalFace> {
    Ok(CanonicalFace {
        nodes,
        least: least_orbit_element(rs, nodes, lambda)?,
        dim: nodes.len(),
        vertex_count: weyl::orbit_size(rs, nodes, lambda),
    })
}

/// `F_I = ∩_{i∈I} F_i`, in canonical form.
pub fn standard_parabolic_face(rs: &RootSystem, lambda: &Weight, subset: NodeSet) -> Result<CanonicalFace> {
    check_subset(rs, subset)?;
    let diag = extended_diagram(rs, lambda)?;
    face_from_nodes(rs, lambda, diag.canonical_nodes(subset)?)
}

/// `F_I = F_{I'}` iff the canonical node sets agree.
pub fn faces_equal(rs: &RootSystem, lambda: &Weight, a: NodeSet, b: NodeSet) -> Result<bool> {
    check_subset(rs, a)?;
    check_subset(rs, b)?;
    let diag = extended_diagram(rs, lambda)?;
    Ok(diag.canonical_nodes(a)? == diag.canonical_nodes(b)?)
}

/// The coordinate face `F_i`.
pub fn coordinate_face(rs: &RootSystem, lambda: &Weight, i: usize) -> Result<CanonicalFace> {
    rs.check_index(i)?;
    standard_parabolic_face(rs, lambda, NodeSet::singleton(i))
}

/// Facet test for `F_i`: `c_j(η_i) ≠ c_j(λ)` for every `j ≠ i`, with `η_i`
/// the least weight of `F_i`. Cross-checked against `dim F_i = n − 1`.
pub fn is_facet(rs: &RootSystem, lambda: &Weight, i: usize) -> Result<bool> {
    let face = coordinate_face(rs, lambda, i)?;
    let n = rs.rank();
    let top = rs.scaled_root_coords(lambda);
    let eta = rs.scaled_root_coords(face.least());
    let by_criterion = (1..=n).filter(|&j| j != i).all(|j| eta[j - 1] != top[j - 1]);
    let by_dimension = face.dim() + 1 == n;
    if by_criterion != by_dimension {
        return Err(Error::violation(format!(
            "facet criterion ({by_criterion}) disagrees with dim F_{i} = {} for λ = {lambda}",
            face.dim()
        )));
    }
    Ok(by_criterion)
}

/// `Σ_{μ∈P_i} μ` together with the closed form it must equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateBarycenter {
    pub index: usize,
    pub count: usize,
    /// `Σ_{μ∈P_i} μ` in fundamental-weight coordinates.
    pub sum: Weight,
    /// `m_i·|P_i| / (ϖ̃_i, ϖ̃_i)`, the multiple of `ϖ̃_i` the sum equals.
    pub coefficient: Rational,
}

pub fn barycenter_coordinate_face(
    rs: &RootSystem,
    lambda: &Weight,
    ws: &WeightSystem,
    i: usize,
) -> Result<CoordinateBarycenter> {
    rs.check_index(i)?;
    rs.check_dominant(lambda)?;
    let members = face_weights(rs, ws, NodeSet::singleton(i))?;
    let n = rs.rank();
    let sum = members.iter().fold(Weight::zero(n), |acc, mu| &acc + mu);
    let m_i = rs.coweight_pairing(lambda, i);
    let coefficient = m_i * rat(members.len() as i64) / rs.coweight_form(i, i);
    // ϖ̃_i = ω_i / d_i in fundamental-weight coordinates.
    let expected_i = &coefficient / rat(rs.symmetrizers()[i - 1]);
    let matches = (1..=n).all(|j| {
        if j == i {
            rat(sum.pairing(j)) == expected_i
        } else {
            sum.pairing(j) == 0
        }
    });
    if !matches {
        return Err(Error::violation(format!(
            "Σ P_{i} = {sum} is not {coefficient}·ϖ̃_{i} for λ = {lambda}"
        )));
    }
    Ok(CoordinateBarycenter {
        index: i,
        count: members.len(),
        sum,
        coefficient,
    })
}

/// Barycenter of `P_I` written on the coweights `{ϖ̃_i : i ∈ I}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceBarycenter {
    pub subset: NodeSet,
    pub count: usize,
    pub sum: Weight,
    /// `(i, a_i)` with barycenter `= Σ a_i ϖ̃_i`; every `a_i ≥ 0`.
    pub coefficients: Vec<(usize, Rational)>,
}

pub fn barycenter_face(
    rs: &RootSystem,
    lambda: &Weight,
    ws: &WeightSystem,
    subset: NodeSet,
) -> Result<FaceBarycenter> {
    rs.check_dominant(lambda)?;
    let members = face_weights(rs, ws, subset)?;
    let n = rs.rank();
    let sum = members.iter().fold(Weight::zero(n), |acc, mu| &acc + mu);
    let count = members.len() as i64;
    // (ϖ̃_i, α_j) = δ_ij, so the coefficient on ϖ̃_j is (sum, α_j) = d_j·⟨sum, α_j^∨⟩.
    let all: Vec<Rational> = (1..=n)
        .map(|j| rat(rs.symmetrizers()[j - 1] * sum.pairing(j)) / rat(count))
        .collect();
    if let Some(j) = (1..=n).find(|&j| !subset.contains(j) && !all[j - 1].is_zero()) {
        return Err(Error::violation(format!(
            "barycenter of P_{subset} has nonzero ϖ̃_{j} component {} for λ = {lambda}",
            all[j - 1]
        )));
    }
    let coefficients: Vec<(usize, Rational)> = subset.iter().map(|i| (i, all[i - 1].clone())).collect();
    if let Some((i, a)) = coefficients.iter().find(|(_, a)| a.is_negative()) {
        return Err(Error::violation(format!(
            "barycenter of P_{subset} has negative coefficient a_{i} = {a} for λ = {lambda}"
        )));
    }
    Ok(FaceBarycenter {
        subset,
        count: members.len(),
        sum,
        coefficients,
    })
}

/// The poset of standard parabolic faces under inclusion.
#[derive(Debug, Clone, Serialize)]
pub struct FaceLattice {
    faces: Vec<CanonicalFace>,
    /// Covering pairs `(lower, upper)` as indices into `faces`.
    covers: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn faces(&self) -> &[CanonicalFace] {
        &self.faces
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.faces[a].nodes.is_subset(self.faces[b].nodes)
    }

    pub fn index_of(&self, nodes: NodeSet) -> Option<usize> {
        self.faces.iter().position(|f| f.nodes == nodes)
    }

    /// The vertex face `{λ}`.
    pub fn bottom(&self) -> usize {
        0
    }

    /// The whole polytope.
    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }
}

fn covering_pairs<T>(items: &[T], leq: impl Fn(&T, &T) -> bool) -> Vec<(usize, usize)> {
    let n = items.len();
    let lt = |a: usize, b: usize| a != b && leq(&items[a], &items[b]);
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

fn lattice_from_diagram(rs: &RootSystem, lambda: &Weight, diag: &ExtendedDiagram) -> Result<FaceLattice> {
    let faces = diag
        .enumerate_connected_with_zero()
        .into_iter()
        .map(|s| face_from_nodes(rs, lambda, s))
        .collect::<Result<Vec<_>>>()?;
    let covers = covering_pairs(&faces, |a, b| a.nodes.is_subset(b.nodes));
    Ok(FaceLattice { faces, covers })
}

/// One face per connected `S ∋ 0`, ordered by `S ⊆ S'`.
pub fn face_lattice(rs: &RootSystem, lambda: &Weight) -> Result<FaceLattice> {
    let diag = extended_diagram(rs, lambda)?;
    lattice_from_diagram(rs, lambda, &diag)
}

/// `S* = S ∪ {j ∈ J : (α_j, α_i) = 0 for all i ∈ S}`; `W_{S*}` stabilizes
/// the face `conv(W_S λ)`.
pub fn stabilizer_nodes(rs: &RootSystem, diag: &ExtendedDiagram, nodes: NodeSet) -> NodeSet {
    let orthogonal = diag.type_j().iter().filter(|&j| {
        let aj = rs.simple_root(j);
        nodes.iter().all(|i| rs.scaled_bilinear(&aj, &rs.simple_root(i)) == 0)
    });
    nodes.union(orthogonal.collect())
}

fn orbit_count(rs: &RootSystem, diag: &ExtendedDiagram, nodes: NodeSet) -> Result<u128> {
    let group = rs.kind().weyl_order();
    let star = stabilizer_nodes(rs, diag, nodes);
    let stab = parabolic_order(rs, star);
    if !group.is_multiple_of(stab) {
        return Err(Error::violation(format!(
            "|W| = {group} is not divisible by |W_{star}| = {stab}"
        )));
    }
    Ok(group / stab)
}

/// An element of the cross-section lattice: the monoid zero or a face class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LatticeElement {
    Zero,
    Face(usize),
}

/// Face lattice plus an adjoined bottom, with the size of each face's
/// `W`-orbit.
#[derive(Debug, Clone, Serialize)]
pub struct CrossSectionLattice {
    lattice: FaceLattice,
    orbit_sizes: Vec<u128>,
    type_j: NodeSet,
}

impl CrossSectionLattice {
    pub fn face_lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn orbit_sizes(&self) -> &[u128] {
        &self.orbit_sizes
    }

    pub fn type_j(&self) -> NodeSet {
        self.type_j
    }

    /// `⊥` first, then the faces in lattice order.
    pub fn elements(&self) -> Vec<LatticeElement> {
        std::iter::once(LatticeElement::Zero)
            .chain((0..self.lattice.len()).map(LatticeElement::Face))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.lattice.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn leq(&self, a: LatticeElement, b: LatticeElement) -> bool {
        match (a, b) {
            (LatticeElement::Zero, _) => true,
            (_, LatticeElement::Zero) => false,
            (LatticeElement::Face(x), LatticeElement::Face(y)) => self.lattice.leq(x, y),
        }
    }

    /// Covering pairs over [`elements`](Self::elements) indices (`⊥` is 0).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let elements = self.elements();
        covering_pairs(&elements, |a, b| self.leq(*a, *b))
    }

    /// Minimal nonzero elements; always exactly the vertex face.
    pub fn minimal_nonzero(&self) -> Vec<usize> {
        let covers = self.covers();
        covers.iter().filter(|(a, _)| *a == 0).map(|(_, b)| b - 1).collect()
    }
}

pub fn cross_section_lattice(rs: &RootSystem, lambda: &Weight) -> Result<CrossSectionLattice> {
    let diag = extended_diagram(rs, lambda)?;
    let lattice = lattice_from_diagram(rs, lambda, &diag)?;
    let orbit_sizes = lattice
        .faces
        .iter()
        .map(|f| orbit_count(rs, &diag, f.nodes))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossSectionLattice {
        lattice,
        orbit_sizes,
        type_j: diag.type_j(),
    })
}

/// `c_k = Σ_{|S|=k} |W| / |W_{S*}|` over connected `S ∪ {0}`.
pub fn f_polynomial(rs: &RootSystem, lambda: &Weight) -> Result<Vec<u128>> {
    let diag = extended_diagram(rs, lambda)?;
    let sets = diag.enumerate_connected_with_zero();
    let top = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut coeffs = vec![0u128; top + 1];
    for s in sets {
        coeffs[s.len()] += orbit_count(rs, &diag, s)?;
    }
    Ok(coeffs)
}

/// Direction `λ − s_i λ` of a one-dimensional canonical face `S = {i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDirection {
    pub node: usize,
    pub direction: Weight,
    /// Index into [`RootSystem::positive_roots`] of the parallel root.
    pub root: usize,
}

pub fn edge_directions(rs: &RootSystem, lambda: &Weight) -> Result<Vec<EdgeDirection>> {
    let diag = extended_diagram(rs, lambda)?;
    diag.enumerate_connected_with_zero()
        .into_iter()
        .filter(|s| s.len() == 1)
        .map(|s| {
            let i = s.lowest().unwrap();
            let direction = lambda - &rs.reflect(i, lambda);
            let coords = rs.root_coords(&direction);
            let root = rs
                .parallel_root(&coords)
                .filter(|&r| {
                    let rc = linalg::to_rational_vec(&rs.positive_root_coords()[r]);
                    linalg::proportionality(&coords, &rc).is_some_and(|t| t.is_positive())
                })
                .ok_or_else(|| {
                    Error::violation(format!("edge direction {direction} is not parallel to a root"))
                })?;
            Ok(EdgeDirection { node: i, direction, root })
        })
        .collect()
}

/// Result of comparing `span{μ − ν : μ, ν ∈ P_I}` with `span{α_j : j ∈ S}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub subset: NodeSet,
    pub canonical: NodeSet,
    pub dim: usize,
}

pub fn face_span_check(
    rs: &RootSystem,
    lambda: &Weight,
    ws: &WeightSystem,
    subset: NodeSet,
) -> Result<SpanReport> {
    let diag = extended_diagram(rs, lambda)?;
    let canonical = diag.canonical_nodes(subset)?;
    let members = face_weights(rs, ws, subset)?;
    let n = rs.rank();
    let mut basis = linalg::EchelonBasis::new(n);
    for mu in &members {
        let diff = rs
            .integral_root_coords(&(lambda - mu))
            .ok_or_else(|| Error::violation(format!("λ − {mu} is not in the root lattice")))?;
        if let Some(j) = (1..=n).find(|&j| diff[j - 1] != 0 && !canonical.contains(j)) {
            return Err(Error::violation(format!(
                "λ − {mu} involves α_{j}, outside the canonical set {canonical} of I = {subset}"
            )));
        }
        if basis.rank() < canonical.len() {
            basis.insert(&linalg::to_rational_vec(&diff));
        }
    }
    if basis.rank() != canonical.len() {
        return Err(Error::violation(format!(
            "span of P_{subset} has dimension {} but the canonical set {canonical} has {} nodes",
            basis.rank(),
            canonical.len()
        )));
    }
    Ok(SpanReport {
        subset,
        canonical,
        dim: basis.rank(),
    })
}
