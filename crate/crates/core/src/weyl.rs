//! Weyl-group orbits of weights, parabolic subgroup orders, and bounded
//! enumeration of the full group.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsys::{CartanType, Family, RootSystem, Weight};

/// Index set `I ⊆ {1..n}` naming the parabolic subgroup `W_I`.
pub type ParabolicIndexSet = NodeSet;

pub(crate) fn check_subset(rs: &RootSystem, subset: NodeSet) -> Result<()> {
    let stray = subset.difference(NodeSet::simple(rs.rank()));
    match stray.highest() {
        Some(index) => Err(Error::IndexOutOfRange {
            index,
            rank: rs.rank(),
        }),
        None => Ok(()),
    }
}

/// Dynkin neighbours of simple root `i` (1-based).
pub fn dynkin_neighbors(rs: &RootSystem, i: usize) -> NodeSet {
    (1..=rs.rank())
        .filter(|&j| j != i && rs.cartan_entry(i, j) != 0)
        .collect()
}

/// The orbit `W_I · μ`, sorted lexicographically.
pub fn orbit(
    rs: &RootSystem,
    subset: ParabolicIndexSet,
    mu: &Weight,
    cap: usize,
) -> Result<BTreeSet<Weight>> {
    rs.check_weight(mu)?;
    check_subset(rs, subset)?;
    let gens: Vec<usize> = subset.iter().collect();
    let mut seen: HashSet<Weight> = HashSet::from([mu.clone()]);
    let mut frontier = vec![mu.clone()];
    while let Some(nu) = frontier.pop() {
        for &i in &gens {
            if nu.pairing(i) == 0 {
                continue;
            }
            let next = rs.reflect(i, &nu);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::ResourceLimit { what: "orbit", cap });
                }
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `u_0 λ` for `u_0` the longest element of `W_I`.
///
/// Reflects in the smallest `i ∈ I` with `⟨μ, α_i^∨⟩ > 0` until `μ` is
/// `I`-antidominant; the result is the unique such point of `W_I λ`.
pub fn least_orbit_element(
    rs: &RootSystem,
    subset: ParabolicIndexSet,
    lambda: &Weight,
) -> Result<Weight> {
    rs.check_dominant(lambda)?;
    check_subset(rs, subset)?;
    let mut mu = lambda.clone();
    while let Some(i) = subset.iter().find(|&i| mu.pairing(i) > 0) {
        rs.reflect_in_place(i, &mut mu);
    }
    Ok(mu)
}

/// Connected components of the Dynkin subdiagram on `subset`.
pub fn components(rs: &RootSystem, subset: NodeSet) -> Vec<NodeSet> {
    let mut remaining = subset;
    let mut out = Vec::new();
    while let Some(start) = remaining.lowest() {
        let mut comp = NodeSet::singleton(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in dynkin_neighbors(rs, i).intersection(subset).iter() {
                if !comp.contains(j) {
                    comp.insert(j);
                    stack.push(j);
                }
            }
        }
        remaining = remaining.difference(comp);
        out.push(comp);
    }
    out
}

/// Type of a connected Dynkin subdiagram, read off its Cartan submatrix.
pub fn component_type(rs: &RootSystem, comp: NodeSet) -> CartanType {
    let k = comp.len();
    let nodes: Vec<usize> = comp.iter().collect();
    let degree = |i: usize| dynkin_neighbors(rs, i).intersection(comp).len();
    let mut max_bond = 0;
    let mut multi_edge = None;
    for &i in &nodes {
        for &j in &nodes {
            if i < j {
                let bond = rs.cartan_entry(i, j) * rs.cartan_entry(j, i);
                if bond > 1 {
                    multi_edge = Some((i, j));
                }
                max_bond = max_bond.max(bond);
            }
        }
    }
    let make = |family| CartanType::new(family, k).expect("finite subdiagram");
    match max_bond {
        0 => make(Family::A),
        3 => make(Family::G),
        2 => {
            let (i, j) = multi_edge.unwrap();
            if k == 4 && degree(i) == 2 && degree(j) == 2 {
                make(Family::F)
            } else if k == 2 {
                make(Family::B)
            } else {
                // B vs C: the end of the double bond with degree 1 carries
                // the short root for B, the long root for C.
                let (end, other) = if degree(i) == 1 { (i, j) } else { (j, i) };
                if rs.symmetrizers()[end - 1] < rs.symmetrizers()[other - 1] {
                    make(Family::B)
                } else {
                    make(Family::C)
                }
            }
        }
        _ => {
            let Some(branch) = nodes.iter().copied().find(|&i| degree(i) == 3) else {
                return make(Family::A);
            };
            let mut arms: Vec<usize> = dynkin_neighbors(rs, branch)
                .intersection(comp)
                .iter()
                .map(|start| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (branch, start);
                    loop {
                        let next = dynkin_neighbors(rs, cur)
                            .intersection(comp)
                            .without(prev)
                            .lowest();
                        match next {
                            Some(nx) => {
                                len += 1;
                                prev = cur;
                                cur = nx;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => make(Family::D),
                [1, 2, 2..=4] => make(Family::E),
                _ => unreachable!("subdiagrams of finite types are finite types"),
            }
        }
    }
}

/// `|W_I|`, as the product of the classified component orders.
pub fn parabolic_order(rs: &RootSystem, subset: ParabolicIndexSet) -> u128 {
    components(rs, subset.intersection(NodeSet::simple(rs.rank())))
        .into_iter()
        .map(|c| component_type(rs, c).weyl_order())
        .product()
}

/// `{i : ⟨λ, α_i^∨⟩ = 0}`.
pub fn zero_support(lambda: &Weight) -> NodeSet {
    (1..=lambda.rank()).filter(|&i| lambda.pairing(i) == 0).collect()
}

/// `|W_I λ| = |W_I| / |W_{I ∩ J}|` for dominant `λ` of type `J`; the
/// stabilizer of a dominant weight is the parabolic subgroup on its zeros.
pub fn orbit_size(rs: &RootSystem, subset: ParabolicIndexSet, lambda: &Weight) -> u128 {
    let j = zero_support(lambda);
    parabolic_order(rs, subset) / parabolic_order(rs, subset.intersection(j))
}

/// An element of `W`: a word in the simple reflections, plus its image of
/// `ρ`, which identifies it uniquely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    key: Weight,
}

impl WeylElement {
    /// `[i_1, ..., i_k]` stands for `s_{i_1} ⋯ s_{i_k}`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(ρ)`.
    pub fn key(&self) -> &Weight {
        &self.key
    }

    pub fn apply(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in self.word.iter().rev() {
            rs.reflect_in_place(i, &mut out);
        }
        out
    }
}

/// Every element of `W`, in breadth-first (length) order.
pub fn enumerate_group(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    if rs.kind().weyl_order() > cap as u128 {
        return Err(Error::ResourceLimit {
            what: "Weyl group enumeration",
            cap,
        });
    }
    let identity = WeylElement {
        word: Vec::new(),
        key: rs.rho(),
    };
    let mut seen: HashSet<Weight> = HashSet::from([identity.key.clone()]);
    let mut out = vec![identity];
    let mut head = 0;
    while head < out.len() {
        let current = out[head].clone();
        head += 1;
        for i in 1..=rs.rank() {
            let key = rs.reflect(i, &current.key);
            if seen.insert(key.clone()) {
                let mut word = Vec::with_capacity(current.word.len() + 1);
                word.push(i);
                word.extend_from_slice(&current.word);
                out.push(WeylElement { word, key });
            }
        }
    }
    Ok(out)
}
