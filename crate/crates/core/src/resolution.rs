//! Dual graphs of minimal resolutions, intersection forms and fundamental cycles.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;
use crate::matgroup::GroupId;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: usize,
    pub self_intersection: i64,
}

/// Exceptional curves `E_i` (nodes) and their transversal intersections (edges).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGraph {
    pub family: String,
    pub nodes: Vec<Node>,
    pub edges: Vec<[usize; 2]>,
}

impl DualGraph {
    /// A graph of `(-2)`-curves on nodes `0..n`.
    fn minus_two(family: String, n: usize, edges: Vec<[usize; 2]>) -> Self {
        let nodes = (0..n).map(|id| Node { id, self_intersection: -2 }).collect();
        Self { family, nodes, edges }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node position by id.
    fn positions(&self) -> Result<HashMap<usize, usize>> {
        let mut pos = HashMap::new();
        for (i, node) in self.nodes.iter().enumerate() {
            if pos.insert(node.id, i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate node id {}", node.id)));
            }
        }
        Ok(pos)
    }

    /// Neighbour lists by node position; rejects loops, repeated edges and
    /// unknown ids.
    pub fn adjacency(&self) -> Result<Vec<Vec<usize>>> {
        let pos = self.positions()?;
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        let mut seen = BTreeSet::new();
        for &[a, b] in &self.edges {
            let (Some(&i), Some(&j)) = (pos.get(&a), pos.get(&b)) else {
                return Err(Error::InvalidGraph(format!("edge [{a}, {b}] names an unknown node")));
            };
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at node {a}")));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!("repeated edge [{a}, {b}]")));
            }
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        Ok(adjacency)
    }

    pub fn is_connected(&self) -> Result<bool> {
        let adjacency = self.adjacency()?;
        if adjacency.is_empty() {
            return Ok(false);
        }
        let mut seen = vec![false; adjacency.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    pub fn is_tree(&self) -> Result<bool> {
        Ok(self.is_connected()? && self.edges.len() + 1 == self.nodes.len())
    }

    pub fn intersection_matrix(&self) -> Result<IntersectionMatrix> {
        let adjacency = self.adjacency()?;
        let n = self.nodes.len();
        let mut entries = vec![vec![0i64; n]; n];
        for (i, node) in self.nodes.iter().enumerate() {
            entries[i][i] = node.self_intersection;
            for &j in &adjacency[i] {
                entries[i][j] = 1;
            }
        }
        Ok(IntersectionMatrix { entries })
    }
}

/// The symmetric integer matrix `E_i . E_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Z . E_j` for every `j`.
    pub fn products(&self, cycle: &Cycle) -> Vec<i64> {
        self.entries.iter().map(|row| row.iter().zip(&cycle.coefficients).map(|(a, &n)| a * n as i64).sum()).collect()
    }

    pub fn pairing(&self, a: &Cycle, b: &Cycle) -> i64 {
        self.products(a).iter().zip(&b.coefficients).map(|(p, &n)| p * n as i64).sum()
    }

    /// Leading principal minors by fraction-free (Bareiss) elimination.
    /// Stops early at a vanishing pivot, which already rules out definiteness.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        let n = self.entries.len();
        let mut m: Vec<Vec<BigInt>> =
            self.entries.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut minors = Vec::with_capacity(n);
        let mut prev = BigInt::from(1);
        for k in 0..n {
            let pivot = m[k][k].clone();
            minors.push(pivot.clone());
            if pivot.is_zero() {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (&m[i][j] * &pivot - &m[i][k] * &m[k][j]) / &prev;
                }
            }
            prev = pivot;
        }
        minors
    }

    /// Sylvester: the `k`-th leading minor has sign `(-1)^k`.
    pub fn is_negative_definite(&self) -> bool {
        let symmetric =
            self.entries.iter().enumerate().all(|(i, row)| {
                row.len() == self.len() && row.iter().enumerate().all(|(j, &x)| x == self.entries[j][i])
            });
        if !symmetric || self.is_empty() {
            return false;
        }
        let minors = self.leading_minors();
        minors.len() == self.len()
            && minors.iter().enumerate().all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() })
    }
}

/// A divisor `sum n_i E_i` supported on the exceptional set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub coefficients: Vec<u64>,
}

impl Cycle {
    /// Coefficients sorted ascending, for order-free comparison.
    pub fn multiset(&self) -> Vec<u64> {
        let mut sorted = self.coefficients.clone();
        sorted.sort_unstable();
        sorted
    }
}

/// Minimal resolution graph: `A_(l-1)`, `D_(r+2)`, `E_6`, `E_7`, `E_8`.
///
/// Numbering: chains run `0, 1, ...`; for `D_n` nodes `n-2` and `n-1` hang off
/// `n-3`; for `E_n` the chain is `0..n-2` and node `n-1` hangs off node 2.
pub fn ade_graph(id: GroupId) -> Result<DualGraph> {
    id.validate()?;
    let chain = |n: usize| -> Vec<[usize; 2]> { (1..n).map(|i| [i - 1, i]).collect() };
    Ok(match id {
        GroupId::Cyclic(l) => {
            let n = l as usize - 1;
            DualGraph::minus_two(format!("A_{n}"), n, chain(n))
        }
        GroupId::BinaryDihedral(r) => {
            let n = r as usize + 2;
            let mut edges = chain(n - 1);
            edges.push([n - 3, n - 1]);
            DualGraph::minus_two(format!("D_{n}"), n, edges)
        }
        GroupId::BinaryTetrahedral | GroupId::BinaryOctahedral | GroupId::BinaryIcosahedral => {
            let n = match id {
                GroupId::BinaryTetrahedral => 6,
                GroupId::BinaryOctahedral => 7,
                _ => 8,
            };
            let mut edges = chain(n - 1);
            edges.push([2, n - 1]);
            DualGraph::minus_two(format!("E_{n}"), n, edges)
        }
    })
}

/// Laufer's computation sequence started from `sum E_i`, adding `E_j` for
/// the smallest `j` with `Z . E_j > 0`.
pub fn fundamental_cycle(graph: &DualGraph) -> Result<Cycle> {
    let order: Vec<usize> = (0..graph.len()).collect();
    fundamental_cycle_with_order(graph, &order)
}

/// As [`fundamental_cycle`], breaking ties by first position in `order`.
pub fn fundamental_cycle_with_order(graph: &DualGraph, order: &[usize]) -> Result<Cycle> {
    let n = graph.len();
    if n == 0 {
        return Err(Error::EmptyCycle);
    }
    if !graph.is_connected()? {
        return Err(Error::InvalidGraph("exceptional set is not connected".into()));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidGraph("tie-break order is not a permutation of the nodes".into()));
    }
    let adjacency = graph.adjacency()?;
    let self_int: Vec<i64> = graph.nodes.iter().map(|v| v.self_intersection).collect();
    let mut z = vec![1u64; n];
    let mut dots: Vec<i64> = (0..n).map(|j| self_int[j] + adjacency[j].len() as i64).collect();
    let guard = 10 * n * n;
    for _ in 0..=guard {
        let Some(&j) = order.iter().find(|&&j| dots[j] > 0) else {
            return Ok(Cycle { coefficients: z });
        };
        z[j] += 1;
        dots[j] += self_int[j];
        for &k in &adjacency[j] {
            dots[k] += 1;
        }
    }
    Err(Error::NonTermination(guard))
}

/// `t = (1 + sum n_i^2) / (1 + sum n_i)` in lowest terms.
pub fn t_factor(cycle: &Cycle) -> Result<Rational> {
    if cycle.coefficients.is_empty() {
        return Err(Error::EmptyCycle);
    }
    let squares: BigInt = cycle.coefficients.iter().map(|&n| BigInt::from(n) * n).sum();
    let sum: BigInt = cycle.coefficients.iter().map(|&n| BigInt::from(n)).sum();
    Ok(Rational::new(squares + 1, sum + 1))
}
