//! The extended Dynkin diagram of `(Φ, λ)` and its connected subdiagrams
//! through the extended node `{−λ}` (node `0`).

use std::fmt::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{self, check_subset, dynkin_neighbors};

/// The Dynkin diagram with an extra node `0` joined to `α_i` exactly when
/// `⟨λ, α_i^∨⟩ > 0`. Bond multiplicities are not recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendedDiagram {
    rank: usize,
    /// `adjacency[v]` is the neighbourhood of node `v`, for `v ∈ 0..=n`.
    adjacency: Vec<NodeSet>,
    type_j: NodeSet,
}

/// Builds the extended diagram; `type_j = {i : ⟨λ, α_i^∨⟩ = 0}`.
pub fn extended_diagram(rs: &RootSystem, lambda: &Weight) -> Result<ExtendedDiagram> {
    rs.check_dominant(lambda)?;
    let n = rs.rank();
    let type_j = weyl::zero_support(lambda);
    let support = NodeSet::simple(n).difference(type_j);
    let mut adjacency = vec![support];
    for i in 1..=n {
        let mut nb = dynkin_neighbors(rs, i);
        if support.contains(i) {
            nb.insert(0);
        }
        adjacency.push(nb);
    }
    Ok(ExtendedDiagram {
        rank: n,
        adjacency,
        type_j,
    })
}

impl ExtendedDiagram {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn type_j(&self) -> NodeSet {
        self.type_j
    }

    pub fn neighbors(&self, node: usize) -> NodeSet {
        self.adjacency[node]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    /// All nodes, `{0, 1, …, n}`.
    pub fn nodes(&self) -> NodeSet {
        NodeSet::simple(self.rank).with(0)
    }

    /// Node set of the component of `start` in the subgraph induced on `within`.
    fn component(&self, within: NodeSet, start: usize) -> NodeSet {
        let mut comp = NodeSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = NodeSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adjacency[v]);
            }
            frontier = next.intersection(within).difference(comp);
            comp = comp.union(frontier);
        }
        comp
    }

    pub fn is_connected(&self, nodes: NodeSet) -> bool {
        match nodes.lowest() {
            None => true,
            Some(v) => self.component(nodes, v) == nodes,
        }
    }

    /// `Γ⁰(Σ)`: the component of the induced subgraph on `Σ` containing `0`.
    pub fn gamma0(&self, sigma: NodeSet) -> Result<NodeSet> {
        if !sigma.contains(0) {
            return Err(Error::Precondition(
                "Γ⁰(Σ) needs the extended node 0 in Σ".into(),
            ));
        }
        if !sigma.is_subset(self.nodes()) {
            return Err(Error::IndexOutOfRange {
                index: sigma.highest().unwrap_or(0),
                rank: self.rank,
            });
        }
        Ok(self.component(sigma, 0))
    }

    /// The canonical node set `Ī⁰ = Γ⁰(Ī ∪ {0}) ∖ {0}` of the face `F_I`.
    pub fn canonical_nodes(&self, subset: NodeSet) -> Result<NodeSet> {
        let all = NodeSet::simple(self.rank);
        if !subset.is_subset(all) {
            return Err(Error::IndexOutOfRange {
                index: subset.difference(all).highest().unwrap_or(0),
                rank: self.rank,
            });
        }
        Ok(self.component(all.difference(subset).with(0), 0).without(0))
    }

    /// Every `S ⊆ {1..n}` with `S ∪ {0}` connected, ordered by size then
    /// lexicographically.
    ///
    /// Grows connected sets from `{0}` one neighbour at a time. At each level
    /// a candidate is either taken (recursing) or banned for the rest of the
    /// level, so every set is produced exactly once.
    pub fn enumerate_connected_with_zero(&self) -> Vec<NodeSet> {
        fn grow(
            diag: &ExtendedDiagram,
            current: NodeSet,
            mut candidates: NodeSet,
            mut banned: NodeSet,
            out: &mut Vec<NodeSet>,
        ) {
            out.push(current.without(0));
            while let Some(v) = candidates.lowest() {
                candidates.remove(v);
                let next = current.with(v);
                let next_candidates = candidates
                    .union(diag.adjacency[v])
                    .difference(next)
                    .difference(banned);
                grow(diag, next, next_candidates, banned, out);
                banned.insert(v);
            }
        }
        let mut out = Vec::new();
        let start = NodeSet::singleton(0);
        grow(self, start, self.adjacency[0], start, &mut out);
        out.sort_by(NodeSet::canonical_cmp);
        out
    }

    /// Every `I ⊆ {1..n}` none of whose Dynkin components lies inside `J`.
    pub fn theorem_a_subsets(&self) -> Vec<NodeSet> {
        let all = NodeSet::simple(self.rank);
        let mut out: Vec<NodeSet> = all
            .subsets()
            .filter(|&subset| {
                let mut rest = subset;
                while let Some(v) = rest.lowest() {
                    let comp = self.component(subset, v);
                    if comp.is_subset(self.type_j) {
                        return false;
                    }
                    rest = rest.difference(comp);
                }
                true
            })
            .collect();
        out.sort_by(NodeSet::canonical_cmp);
        out
    }

    /// Graphviz rendering; node `0` is labelled `-λ`, nodes outside `J` are
    /// shaded.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph extended_dynkin {\n");
        s.push_str("  node [shape=circle];\n");
        s.push_str("  n0 [label=\"-λ\", shape=box];\n");
        for i in 1..=self.rank {
            let style = if self.type_j.contains(i) {
                ""
            } else {
                ", style=filled, fillcolor=lightgray"
            };
            let _ = writeln!(s, "  n{i} [label=\"{i}\"{style}];");
        }
        for a in 0..=self.rank {
            for b in self.adjacency[a].iter().filter(|&b| b > a) {
                let _ = writeln!(s, "  n{a} -- n{b};");
            }
        }
        s.push_str("}\n");
        s
    }
}

pub fn gamma0(diag: &ExtendedDiagram, sigma: NodeSet) -> Result<NodeSet> {
    diag.gamma0(sigma)
}

pub fn canonical_nodes(diag: &ExtendedDiagram, subset: NodeSet) -> Result<NodeSet> {
    diag.canonical_nodes(subset)
}

/// Validated index set from 1-based labels.
pub fn index_set(rs: &RootSystem, labels: &[usize]) -> Result<NodeSet> {
    for &i in labels {
        rs.check_index(i)?;
    }
    let set: NodeSet = labels.iter().copied().collect();
    check_subset(rs, set)?;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{root_system, CartanType};

    fn set(v: &[usize]) -> NodeSet {
        v.iter().copied().collect()
    }

    fn diag(f: char, n: usize, lambda: &[i64]) -> ExtendedDiagram {
        let rs = root_system(f, n).unwrap();
        extended_diagram(&rs, &Weight::new(lambda.to_vec())).unwrap()
    }

    #[test]
    fn extended_diagram_examples() {
        let d = diag('A', 2, &[1, 1]);
        assert!(d.adjacent(0, 1) && d.adjacent(0, 2));
        assert_eq!(d.type_j(), NodeSet::EMPTY);
        let d = diag('A', 2, &[1, 0]);
        assert!(d.adjacent(0, 1) && !d.adjacent(0, 2));
        assert_eq!(d.type_j(), set(&[2]));
        let d = diag('A', 2, &[0, 0]);
        assert_eq!(d.neighbors(0), NodeSet::EMPTY);
        assert_eq!(d.type_j(), set(&[1, 2]));
        let rs = root_system('A', 2).unwrap();
        assert!(extended_diagram(&rs, &Weight::new(vec![1, -1])).is_err());
    }

    #[test]
    fn gamma0_examples() {
        let d = diag('A', 2, &[1, 0]);
        assert_eq!(d.gamma0(set(&[0])).unwrap(), set(&[0]));
        assert_eq!(d.gamma0(set(&[0, 2])).unwrap(), set(&[0]));
        assert_eq!(d.gamma0(set(&[0, 1, 2])).unwrap(), set(&[0, 1, 2]));
        assert!(matches!(d.gamma0(set(&[1, 2])), Err(Error::Precondition(_))));
    }

    #[test]
    fn canonical_nodes_examples() {
        let d = diag('A', 2, &[1, 1]);
        assert_eq!(d.canonical_nodes(set(&[1, 2])).unwrap(), NodeSet::EMPTY);
        assert_eq!(d.canonical_nodes(NodeSet::EMPTY).unwrap(), set(&[1, 2]));
        let d = diag('A', 2, &[1, 0]);
        assert_eq!(d.canonical_nodes(set(&[1])).unwrap(), NodeSet::EMPTY);
        assert!(d.canonical_nodes(set(&[3])).is_err());
    }

    #[test]
    fn connected_enumeration_examples() {
        assert_eq!(
            diag('A', 2, &[1, 1]).enumerate_connected_with_zero(),
            vec![NodeSet::EMPTY, set(&[1]), set(&[2]), set(&[1, 2])]
        );
        assert_eq!(
            diag('A', 2, &[1, 0]).enumerate_connected_with_zero(),
            vec![NodeSet::EMPTY, set(&[1]), set(&[1, 2])]
        );
        assert_eq!(
            diag('A', 2, &[0, 0]).enumerate_connected_with_zero(),
            vec![NodeSet::EMPTY]
        );
    }

    #[test]
    fn theorem_a_examples() {
        assert_eq!(
            diag('A', 2, &[1, 0]).theorem_a_subsets(),
            vec![NodeSet::EMPTY, set(&[1]), set(&[1, 2])]
        );
        assert_eq!(diag('B', 3, &[1, 1, 1]).theorem_a_subsets().len(), 8);
        assert_eq!(
            diag('B', 3, &[0, 0, 0]).theorem_a_subsets(),
            vec![NodeSet::EMPTY]
        );
    }

    /// Filter-based oracle: test every subset for connectivity with node 0.
    fn connected_by_filter(d: &ExtendedDiagram) -> Vec<NodeSet> {
        let mut out: Vec<NodeSet> = NodeSet::simple(d.rank())
            .subsets()
            .filter(|s| d.is_connected(s.with(0)))
            .collect();
        out.sort_by(NodeSet::canonical_cmp);
        out
    }

    #[test]
    fn anchored_growth_matches_filter_and_theorem_a() {
        for kind in CartanType::all_up_to(8) {
            let rs = RootSystem::new(kind);
            let n = rs.rank();
            for pattern in NodeSet::simple(n).subsets() {
                let lambda = Weight::new((1..=n).map(|i| pattern.contains(i) as i64).collect());
                let d = extended_diagram(&rs, &lambda).unwrap();
                let grown = d.enumerate_connected_with_zero();
                assert_eq!(grown, connected_by_filter(&d), "{kind} {lambda}");
                assert_eq!(grown.len(), d.theorem_a_subsets().len(), "{kind} {lambda}");
            }
        }
    }

    #[test]
    fn canonicalization_properties() {
        for kind in CartanType::all_up_to(5) {
            let rs = RootSystem::new(kind);
            let n = rs.rank();
            let all = NodeSet::simple(n);
            for pattern in all.subsets() {
                let lambda = Weight::new((1..=n).map(|i| pattern.contains(i) as i64).collect());
                let d = extended_diagram(&rs, &lambda).unwrap();
                for subset in all.subsets() {
                    let s = d.canonical_nodes(subset).unwrap();
                    assert!(d.is_connected(s.with(0)));
                    assert!(s.intersection(subset).is_empty());
                }
                for s in d.enumerate_connected_with_zero() {
                    assert_eq!(d.canonical_nodes(all.difference(s)).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn dot_output_labels_extended_node() {
        let dot = diag('A', 2, &[1, 0]).to_dot();
        assert!(dot.contains("n0 [label=\"-λ\""));
        assert!(dot.contains("n0 -- n1;"));
        assert!(dot.contains("n1 -- n2;"));
        assert!(!dot.contains("n0 -- n2;"));
    }
}
