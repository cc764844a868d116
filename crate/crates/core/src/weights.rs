//! Saturated weight sets `P(λ)`, α-strings, the root-lattice order and the
//! weight sets `P_I` of standard parabolic faces.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::nodeset::NodeSet;
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::check_subset;

/// The weights of the irreducible module of highest weight `λ`.
#[derive(Debug, Clone)]
pub struct WeightSystem {
    highest: Weight,
    weights: Vec<Weight>,
    index: HashSet<Weight>,
}

impl WeightSystem {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// All weights, sorted lexicographically.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, mu: &Weight) -> bool {
        self.index.contains(mu)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.weights.iter()
    }
}

/// Builds `P(λ)` by descending along α-strings.
///
/// Whenever `k = ⟨μ, α_i^∨⟩ > 0`, the whole run `μ − α_i, …, μ − k·α_i`
/// (ending at `s_i μ`) is added. The closure is saturated and `W`-stable,
/// hence equals `P(λ)`.
pub fn weight_system(rs: &RootSystem, lambda: &Weight, cap: usize) -> Result<WeightSystem> {
    rs.check_dominant(lambda)?;
    let n = rs.rank();
    let mut index: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for i in 1..=n {
            let k = mu.pairing(i);
            if k <= 0 {
                continue;
            }
            let alpha = rs.simple_root(i);
            let mut nu = mu.clone();
            for _ in 0..k {
                nu = &nu - &alpha;
                if !index.contains(&nu) {
                    if index.len() >= cap {
                        return Err(Error::ResourceLimit {
                            what: "weight system",
                            cap,
                        });
                    }
                    index.insert(nu.clone());
                    stack.push(nu.clone());
                }
            }
        }
    }
    let mut weights: Vec<Weight> = index.iter().cloned().collect();
    weights.sort();
    Ok(WeightSystem {
        highest: lambda.clone(),
        weights,
        index,
    })
}

/// The maximal run `μ − pα, …, μ, …, μ + qα` inside `P(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaString {
    pub weights: Vec<Weight>,
    pub p: usize,
    pub q: usize,
}

/// The string through `μ` in direction `alpha` (any root, in
/// fundamental-weight coordinates).
pub fn root_string(ws: &WeightSystem, mu: &Weight, alpha: &Weight) -> Result<AlphaString> {
    if !ws.contains(mu) {
        return Err(Error::Precondition(format!("{mu} is not a weight of P({})", ws.highest)));
    }
    let mut below = Vec::new();
    let mut cur = mu - alpha;
    while ws.contains(&cur) {
        let next = &cur - alpha;
        below.push(cur);
        cur = next;
    }
    let mut above = Vec::new();
    let mut cur = mu + alpha;
    while ws.contains(&cur) {
        let next = &cur + alpha;
        above.push(cur);
        cur = next;
    }
    let (p, q) = (below.len(), above.len());
    let mut weights: Vec<Weight> = below.into_iter().rev().collect();
    weights.push(mu.clone());
    weights.extend(above);
    Ok(AlphaString { weights, p, q })
}

/// The `α_i`-string through `μ`; satisfies `p − q = ⟨μ, α_i^∨⟩`.
pub fn alpha_string(rs: &RootSystem, ws: &WeightSystem, mu: &Weight, i: usize) -> Result<AlphaString> {
    rs.check_index(i)?;
    root_string(ws, mu, &rs.simple_root(i))
}

/// `Σ_{γ in the α-string through μ} (γ, α)`; zero for every root and weight.
pub fn string_sum(rs: &RootSystem, ws: &WeightSystem, mu: &Weight, alpha: &Weight) -> Result<Rational> {
    let s = root_string(ws, mu, alpha)?;
    let scaled: i64 = s.weights.iter().map(|g| rs.scaled_bilinear(g, alpha)).sum();
    Ok(linalg::ratio(scaled, rs.root_denominator()))
}

/// `μ ≤ ν` iff `ν − μ` is a nonnegative combination of simple roots.
pub fn leq(rs: &RootSystem, mu: &Weight, nu: &Weight) -> bool {
    // det(A) > 0 for every finite type, so signs survive the scaling.
    rs.scaled_root_coords(&(nu - mu)).iter().all(|&x| x >= 0)
}

/// `P_I = {μ ∈ P(λ) : c_i(μ) = c_i(λ) for i ∈ I}`, sorted.
pub fn face_weights(rs: &RootSystem, ws: &WeightSystem, subset: NodeSet) -> Result<Vec<Weight>> {
    check_subset(rs, subset)?;
    let top = rs.scaled_root_coords(ws.highest());
    Ok(ws
        .iter()
        .filter(|mu| {
            let c = rs.scaled_root_coords(mu);
            subset.iter().all(|i| c[i - 1] == top[i - 1])
        })
        .cloned()
        .collect())
}

/// Pairs `μ < ν` in `P_I` with no monotone path of simple-root steps inside
/// `P_I` from `μ` up to `ν`.
///
/// A path exists for every pair iff each `ν` has, for every `μ < ν`, a step
/// down `ν − α_j ∈ P_I` with `j` in the support of `ν − μ`. For each `ν` the
/// only possible offenders differ from `ν` solely on the coordinates `K`
/// where no step down exists, so they are found by bucketing `P_I` on the
/// coordinates outside `K`.
pub fn chain_violations(
    rs: &RootSystem,
    ws: &WeightSystem,
    subset: NodeSet,
    limit: usize,
) -> Result<Vec<(Weight, Weight)>> {
    let face = face_weights(rs, ws, subset)?;
    let members: HashSet<&Weight> = face.iter().collect();
    let coords: Vec<Vec<i64>> = face.iter().map(|mu| rs.scaled_root_coords(mu)).collect();
    let n = rs.rank();
    let roots: Vec<Weight> = (1..=n).map(|j| rs.simple_root(j)).collect();
    let free = NodeSet::simple(n).difference(subset);

    let mut buckets: HashMap<NodeSet, HashMap<Vec<i64>, Vec<usize>>> = HashMap::new();
    let key = |c: &[i64], k: NodeSet| -> Vec<i64> {
        (1..=n).filter(|j| !k.contains(*j)).map(|j| c[j - 1]).collect()
    };
    let mut out = Vec::new();
    for (v, nu) in face.iter().enumerate() {
        let stuck: NodeSet = free
            .iter()
            .filter(|&j| !members.contains(&(nu - &roots[j - 1])))
            .collect();
        if stuck.is_empty() {
            continue;
        }
        let table = buckets.entry(stuck).or_insert_with(|| {
            let mut t: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
            for (m, c) in coords.iter().enumerate() {
                t.entry(key(c, stuck)).or_default().push(m);
            }
            t
        });
        for &m in &table[&key(&coords[v], stuck)] {
            if m != v && stuck.iter().all(|j| coords[m][j - 1] <= coords[v][j - 1]) {
                out.push((face[m].clone(), nu.clone()));
                if out.len() >= limit {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::rootsys::{root_system, CartanType};
    use std::collections::VecDeque;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn set(v: &[usize]) -> NodeSet {
        v.iter().copied().collect()
    }

    #[test]
    fn sl2_strings() {
        let a1 = root_system('A', 1).unwrap();
        for m in 0..6 {
            let ws = weight_system(&a1, &w(&[m]), 1000).unwrap();
            assert_eq!(ws.len(), m as usize + 1);
            for t in 0..=m {
                assert!(ws.contains(&w(&[m - 2 * t])));
            }
        }
    }

    #[test]
    fn a2_weight_systems() {
        let a2 = root_system('A', 2).unwrap();
        let adj = weight_system(&a2, &w(&[1, 1]), 1000).unwrap();
        assert_eq!(adj.len(), 7);
        assert!(adj.contains(&Weight::zero(2)));
        for r in a2.roots() {
            assert!(adj.contains(&r));
        }
        assert_eq!(weight_system(&a2, &w(&[1, 0]), 1000).unwrap().len(), 3);
        assert!(matches!(
            weight_system(&a2, &w(&[1, 1]), 5),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(weight_system(&a2, &w(&[1, -1]), 5), Err(Error::NotDominant(_))));
    }

    #[test]
    fn alpha_string_examples() {
        let a1 = root_system('A', 1).unwrap();
        let ws = weight_system(&a1, &w(&[1]), 100).unwrap();
        let s = alpha_string(&a1, &ws, &w(&[1]), 1).unwrap();
        assert_eq!(s.weights, vec![w(&[-1]), w(&[1])]);
        assert_eq!((s.p, s.q), (1, 0));

        let a2 = root_system('A', 2).unwrap();
        let ws = weight_system(&a2, &w(&[1, 1]), 100).unwrap();
        let zero = Weight::zero(2);
        let s = alpha_string(&a2, &ws, &zero, 1).unwrap();
        let a1r = a2.simple_root(1);
        assert_eq!(s.weights, vec![-&a1r, zero.clone(), a1r.clone()]);
        assert_eq!((s.p, s.q), (1, 1));
        assert!(alpha_string(&a2, &ws, &w(&[5, 5]), 1).is_err());
        assert!(alpha_string(&a2, &ws, &zero, 3).is_err());
    }

    #[test]
    fn string_length_one_means_orthogonal() {
        let b2 = root_system('B', 2).unwrap();
        let ws = weight_system(&b2, &w(&[2, 1]), 1000).unwrap();
        for mu in ws.iter() {
            for i in 1..=2 {
                let s = alpha_string(&b2, &ws, mu, i).unwrap();
                assert_eq!(s.p as i64 - s.q as i64, mu.pairing(i));
                if s.weights.len() == 1 {
                    assert_eq!(mu.pairing(i), 0);
                }
            }
        }
    }

    #[test]
    fn leq_examples() {
        let a2 = root_system('A', 2).unwrap();
        let lambda = w(&[1, 1]);
        assert!(leq(&a2, &lambda, &lambda));
        let s1 = a2.simple_reflection(1, &lambda).unwrap();
        assert!(leq(&a2, &s1, &lambda));
        assert!(!leq(&a2, &lambda, &s1));
        let w1 = w(&[1, 0]);
        let x = &w1 - &a2.simple_root(1);
        let y = &w1 - &a2.simple_root(2);
        assert!(!leq(&a2, &x, &y) && !leq(&a2, &y, &x));
    }

    #[test]
    fn face_weight_examples() {
        let a2 = root_system('A', 2).unwrap();
        let lambda = w(&[1, 1]);
        let ws = weight_system(&a2, &lambda, 100).unwrap();
        assert_eq!(face_weights(&a2, &ws, NodeSet::simple(2)).unwrap(), vec![lambda.clone()]);
        assert_eq!(face_weights(&a2, &ws, NodeSet::EMPTY).unwrap().len(), 7);
        let mut expected = vec![lambda.clone(), &lambda - &a2.simple_root(2)];
        expected.sort();
        assert_eq!(face_weights(&a2, &ws, set(&[1])).unwrap(), expected);
    }

    #[test]
    fn string_sums_vanish_for_all_roots() {
        for kind in CartanType::all_up_to(3) {
            let rs = RootSystem::new(kind);
            let lambda = Weight::new(vec![1; rs.rank()]);
            let ws = weight_system(&rs, &lambda, 100_000).unwrap();
            for mu in ws.iter() {
                for alpha in rs.roots() {
                    assert_eq!(string_sum(&rs, &ws, mu, &alpha).unwrap(), rat(0), "{kind} {mu}");
                }
            }
        }
    }

    /// Upward reachability by single simple-root steps inside `P_I`.
    fn brute_force_chain(rs: &RootSystem, ws: &WeightSystem, subset: NodeSet) -> bool {
        let face = face_weights(rs, ws, subset).unwrap();
        let members: HashSet<&Weight> = face.iter().collect();
        for mu in &face {
            let mut reach: HashSet<Weight> = HashSet::new();
            let mut queue = VecDeque::from([mu.clone()]);
            while let Some(x) = queue.pop_front() {
                for j in 1..=rs.rank() {
                    let y = &x + &rs.simple_root(j);
                    if members.contains(&y) && reach.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            for nu in &face {
                if nu != mu && leq(rs, mu, nu) && !reach.contains(nu) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn chain_check_agrees_with_brute_force() {
        for kind in CartanType::all_up_to(3) {
            let rs = RootSystem::new(kind);
            let n = rs.rank();
            let mut lambdas = vec![Weight::new(vec![1; n])];
            let mut nonuniform = vec![1; n];
            nonuniform[0] = 2;
            lambdas.push(Weight::new(nonuniform));
            lambdas.push(Weight::fundamental(n, n));
            for lambda in lambdas {
                let ws = weight_system(&rs, &lambda, 100_000).unwrap();
                for subset in NodeSet::simple(n).subsets() {
                    let fast = chain_violations(&rs, &ws, subset, 10).unwrap();
                    assert!(fast.is_empty(), "{kind} {lambda} {subset}: {fast:?}");
                    assert!(brute_force_chain(&rs, &ws, subset));
                }
            }
        }
    }

    #[test]
    fn chain_check_detects_a_gap() {
        // Removing the middle of the A_1 string 2ω, 0, −2ω breaks the chain.
        let a1 = root_system('A', 1).unwrap();
        let mut ws = weight_system(&a1, &w(&[2]), 100).unwrap();
        ws.index.remove(&w(&[0]));
        ws.weights.retain(|x| *x != w(&[0]));
        let bad = chain_violations(&a1, &ws, NodeSet::EMPTY, 10).unwrap();
        assert_eq!(bad, vec![(w(&[-2]), w(&[2]))]);
        assert!(!brute_force_chain(&a1, &ws, NodeSet::EMPTY));
    }
}
