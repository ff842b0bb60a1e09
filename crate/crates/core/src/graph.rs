//! Directed and undirected k-power graphs and their structural queries.
//!
//! The directed graph is the functional graph of `x -> x^k`. The undirected
//! graph drops loops and merges `x -> y`, `y -> x` into a single edge, so
//! every component carries at most one cycle.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{ElementIndex, FiniteGroup};

/// Reduce `k` modulo the group order, mapping residue 0 to the order itself.
///
/// `x^k` only depends on `k mod o(G)`, so this is the canonical exponent.
pub fn normalize_exponent(k: u64, order: usize) -> u64 {
    match k % order as u64 {
        0 => order as u64,
        r => r,
    }
}

fn check_exponent(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::ExponentTooSmall(k))
    } else {
        Ok(())
    }
}

/// Arc `a -> a^k` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedKPowerGraph {
    k_raw: u64,
    k: u64,
    successor: Vec<u32>,
}

impl DirectedKPowerGraph {
    pub fn build(g: &FiniteGroup, k: u64) -> Result<Self> {
        check_exponent(k)?;
        let kn = normalize_exponent(k, g.order());
        let successor = (0..g.order()).map(|x| g.pow_raw(x, kn) as u32).collect();
        Ok(DirectedKPowerGraph {
            k_raw: k,
            k: kn,
            successor,
        })
    }

    pub fn group_order(&self) -> usize {
        self.successor.len()
    }

    pub fn k_raw(&self) -> u64 {
        self.k_raw
    }

    /// Normalized exponent.
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn successor(&self, x: ElementIndex) -> usize {
        self.successor[x.index()] as usize
    }

    pub fn successors(&self) -> &[u32] {
        &self.successor
    }

    pub fn is_fixed_point(&self, x: usize) -> bool {
        self.successor[x] as usize == x
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.successor.len())
            .filter(|&x| self.is_fixed_point(x))
            .collect()
    }

    /// Arcs excluding fixed points.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.successor
            .iter()
            .enumerate()
            .map(|(x, &y)| (x, y as usize))
            .filter(|&(x, y)| x != y)
    }

    /// Per-vertex `(in_degree, out_degree)`, counting fixed points as
    /// loops on themselves.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut indeg = vec![0usize; self.successor.len()];
        for &y in &self.successor {
            indeg[y as usize] += 1;
        }
        indeg.into_iter().map(|d| (d, 1)).collect()
    }

    /// Lengths of the cycles of the map, fixed points included as length 1,
    /// sorted ascending.
    pub fn functional_cycle_lengths(&self) -> Vec<usize> {
        let n = self.successor.len();
        // 0 = unvisited, 1 = on current walk, 2 = done
        let mut state = vec![0u8; n];
        let mut lengths = vec![];
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut walk = vec![];
            let mut x = start;
            while state[x] == 0 {
                state[x] = 1;
                walk.push(x);
                x = self.successor[x] as usize;
            }
            if state[x] == 1 {
                let pos = walk.iter().position(|&v| v == x).unwrap();
                lengths.push(walk.len() - pos);
            }
            for v in walk {
                state[v] = 2;
            }
        }
        lengths.sort_unstable();
        lengths
    }
}

/// Undirected simple k-power graph with sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPowerGraph {
    k_raw: u64,
    k: u64,
    adjacency: Vec<Vec<u32>>,
    fixed_points: Vec<usize>,
    edge_count: usize,
}

impl KPowerGraph {
    pub fn build(g: &FiniteGroup, k: u64) -> Result<Self> {
        Ok(Self::from_directed(&DirectedKPowerGraph::build(g, k)?))
    }

    pub fn from_directed(d: &DirectedKPowerGraph) -> Self {
        let n = d.group_order();
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (x, y) in d.arcs() {
            adjacency[x].push(y as u32);
            adjacency[y].push(x as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        KPowerGraph {
            k_raw: d.k_raw,
            k: d.k,
            adjacency,
            fixed_points: d.fixed_points(),
            edge_count,
        }
    }

    pub fn group_order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn k_raw(&self) -> u64 {
        self.k_raw
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v as usize {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Vertices with `x^k = x`.
    pub fn fixed_points(&self) -> &[usize] {
        &self.fixed_points
    }

    /// Connected components, classified, ordered by least member.
    pub fn components(&self) -> Vec<ComponentProfile> {
        let n = self.group_order();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    let w = w as usize;
                    if !seen[w] {
                        seen[w] = true;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(self.classify(members));
        }
        out
    }

    fn classify(&self, vertices: Vec<usize>) -> ComponentProfile {
        let v = vertices.len();
        let e = vertices.iter().map(|&x| self.degree(x)).sum::<usize>() / 2;
        debug_assert!(e <= v, "component with more edges than vertices");
        let shape = if v == 1 {
            ComponentShape::Isolated
        } else if v == 2 {
            ComponentShape::K2
        } else if e + 1 == v {
            ComponentShape::Tree
        } else if vertices.iter().all(|&x| self.degree(x) == 2) {
            ComponentShape::Cycle { length: v }
        } else {
            ComponentShape::Unicyclic {
                cycle_length: self.core_size(&vertices),
            }
        };
        ComponentProfile {
            vertex_count: v,
            edge_count: e,
            shape,
            vertices,
        }
    }

    /// Vertices left after repeatedly stripping leaves.
    fn core_size(&self, vertices: &[usize]) -> usize {
        let mut deg: std::collections::HashMap<usize, usize> =
            vertices.iter().map(|&x| (x, self.degree(x))).collect();
        let mut leaves: Vec<usize> = vertices.iter().copied().filter(|x| deg[x] == 1).collect();
        let mut removed = 0;
        while let Some(x) = leaves.pop() {
            removed += 1;
            deg.insert(x, 0);
            for &w in &self.adjacency[x] {
                let w = w as usize;
                let d = deg.get_mut(&w).unwrap();
                if *d > 0 {
                    *d -= 1;
                    if *d == 1 {
                        leaves.push(w);
                    }
                }
            }
        }
        vertices.len() - removed
    }

    pub fn is_connected(&self) -> bool {
        self.group_order() <= 1 || self.components().len() == 1
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Option<usize>>> {
        let n = self.group_order();
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, order: n });
        }
        let mut dist = vec![None; n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &w in &self.adjacency[x] {
                let w = w as usize;
                if dist[w].is_none() {
                    dist[w] = Some(dx + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Diameter of a connected graph.
    ///
    /// A connected k-power graph is a tree (at most `n - 1` edges), so two
    /// BFS sweeps give the exact eccentricity maximum.
    pub fn diameter(&self) -> Result<usize> {
        if self.group_order() == 0 {
            return Ok(0);
        }
        let first = self.distances_from(0)?;
        if first.iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        debug_assert_eq!(self.edge_count + 1, self.group_order());
        let (far, _) = first
            .iter()
            .enumerate()
            .max_by_key(|&(i, d)| (d.unwrap(), std::cmp::Reverse(i)))
            .unwrap();
        let second = self.distances_from(far)?;
        Ok(second.into_iter().map(Option::unwrap).max().unwrap())
    }

    pub fn has_cycle(&self) -> bool {
        self.components().iter().any(|c| c.cycle_length().is_some())
    }

    /// Cycle length of every component that has one, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .components()
            .iter()
            .filter_map(ComponentProfile::cycle_length)
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ComponentShape {
    Isolated,
    K2,
    Cycle { length: usize },
    Tree,
    Unicyclic { cycle_length: usize },
}

impl ComponentShape {
    /// Isolated vertex, `K2`, or a pure cycle.
    pub fn is_elementary(self) -> bool {
        matches!(
            self,
            ComponentShape::Isolated | ComponentShape::K2 | ComponentShape::Cycle { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub shape: ComponentShape,
    pub vertices: Vec<usize>,
}

impl ComponentProfile {
    pub fn cycle_length(&self) -> Option<usize> {
        match self.shape {
            ComponentShape::Cycle { length } => Some(length),
            ComponentShape::Unicyclic { cycle_length } => Some(cycle_length),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    fn group(s: &str) -> FiniteGroup {
        FiniteGroup::build(s.parse().unwrap()).unwrap()
    }

    fn graph(s: &str, k: u64) -> KPowerGraph {
        KPowerGraph::build(&group(s), k).unwrap()
    }

    /// Pairwise definition: `x ~ y` iff `x != y` and one is the k-th power of the other.
    fn brute_edges(g: &FiniteGroup, k: u64) -> Vec<(usize, usize)> {
        let els: Vec<_> = g.elements().collect();
        let mut out = vec![];
        for (i, &x) in els.iter().enumerate() {
            for &y in &els[i + 1..] {
                if g.power(x, k).unwrap() == y || g.power(y, k).unwrap() == x {
                    out.push((x.index(), y.index()));
                }
            }
        }
        out
    }

    #[test]
    fn directed_examples() {
        let d = DirectedKPowerGraph::build(&group("cyclic:4"), 2).unwrap();
        assert_eq!(d.successors(), &[0, 2, 0, 2]);
        let d = DirectedKPowerGraph::build(&group("sym:3"), 7).unwrap();
        assert_eq!(d.k(), 1);
        assert_eq!(d.fixed_points().len(), 6);
        assert_eq!(d.arcs().count(), 0);
        let d = DirectedKPowerGraph::build(&group("cyclic:31"), 2).unwrap();
        assert!((0..31).all(|x| d.successors()[x] as usize == 2 * x % 31));
        assert_eq!(
            DirectedKPowerGraph::build(&group("cyclic:5"), 1),
            Err(Error::ExponentTooSmall(1))
        );
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_exponent(2, 4), 2);
        assert_eq!(normalize_exponent(4, 4), 4);
        assert_eq!(normalize_exponent(6, 4), 2);
        assert_eq!(normalize_exponent(9, 1), 1);
        let a = graph("dihedral:5", 3);
        let b = graph("dihedral:5", 13);
        assert_eq!(a.edges(), b.edges());
        assert_eq!(b.k_raw(), 13);
        assert_eq!(b.k(), 3);
    }

    #[test]
    fn z4_tree() {
        let gr = graph("cyclic:4", 2);
        assert_eq!(gr.edges(), vec![(0, 2), (1, 2), (2, 3)]);
        let comps = gr.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].shape, ComponentShape::Tree);
        assert_eq!(
            gr.distances_from(2).unwrap(),
            vec![Some(1), Some(1), Some(0), Some(1)]
        );
        assert_eq!(gr.diameter(), Ok(2));
        assert!(!gr.has_cycle());
    }

    #[test]
    fn z31_components() {
        let gr = graph("cyclic:31", 2);
        let comps = gr.components();
        assert_eq!(comps.len(), 7);
        assert_eq!(comps[0].shape, ComponentShape::Isolated);
        assert!(comps[1..]
            .iter()
            .all(|c| c.shape == ComponentShape::Cycle { length: 5 }));
        assert_eq!(gr.cycle_lengths(), vec![5; 6]);
        assert_eq!(gr.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn empty_graph_components() {
        let gr = graph("sym:3", 7);
        let comps = gr.components();
        assert_eq!(comps.len(), 6);
        assert!(comps.iter().all(|c| c.shape == ComponentShape::Isolated));
        assert_eq!(gr.distances_from(3).unwrap().iter().flatten().count(), 1);
    }

    #[test]
    fn s3_k2_is_acyclic() {
        let gr = graph("sym:3", 2);
        assert!(!gr.has_cycle());
        let shapes: Vec<_> = gr.components().iter().map(|c| c.shape).collect();
        assert_eq!(shapes, vec![ComponentShape::Tree, ComponentShape::K2]);
    }

    #[test]
    fn path_distances() {
        // Z_8, k = 2: 1 -> 2 -> 4 -> 0
        let gr = graph("cyclic:8", 2);
        let d = gr.distances_from(4).unwrap();
        assert_eq!((d[4], d[2], d[1]), (Some(0), Some(1), Some(2)));
        assert_eq!(gr.diameter(), Ok(4));
        assert_eq!(graph("cyclic:2", 2).diameter(), Ok(1));
    }

    #[test]
    fn unicyclic_component() {
        // Z_14, k = 2: each 3-cycle of order-7 elements carries odd pendants
        let gr = graph("cyclic:14", 2);
        let comps = gr.components();
        assert!(comps
            .iter()
            .any(|c| c.shape == ComponentShape::Unicyclic { cycle_length: 3 }));
        assert_eq!(gr.cycle_lengths(), vec![3, 3]);
    }

    fn corpus() -> Vec<FiniteGroup> {
        let mut specs = vec![];
        for n in 1..=40 {
            specs.push(GroupSpec::Cyclic(n));
        }
        for n in 1..=15 {
            specs.push(GroupSpec::Dihedral(n));
        }
        for n in 2..=8 {
            specs.push(GroupSpec::Quaternion(n));
        }
        for n in 1..=4 {
            specs.push(GroupSpec::Symmetric(n));
        }
        specs.push(GroupSpec::Product(vec![2, 2, 3]));
        specs.push(GroupSpec::Product(vec![3, 9]));
        specs.into_iter().map(|s| FiniteGroup::build(s).unwrap()).collect()
    }

    #[test]
    fn matches_pairwise_definition_and_pseudoforest() {
        for g in corpus() {
            let n = g.order();
            for k in 2..=n as u64 + 1 {
                let gr = KPowerGraph::build(&g, k).unwrap();
                assert_eq!(gr.edges(), brute_edges(&g, k), "{} k={k}", g.spec());
                assert!(gr.edge_count() < n.max(1));
                let comps = gr.components();
                let mut all: Vec<usize> = comps.iter().flat_map(|c| c.vertices.clone()).collect();
                all.sort_unstable();
                assert_eq!(all, (0..n).collect::<Vec<_>>());
                assert_eq!(comps.iter().map(|c| c.edge_count).sum::<usize>(), gr.edge_count());
                for c in &comps {
                    assert!(c.edge_count <= c.vertex_count);
                    for &v in &c.vertices {
                        for &w in gr.neighbors(v) {
                            assert!(gr.has_edge(w as usize, v));
                            assert_ne!(w as usize, v);
                        }
                    }
                }
                let d = DirectedKPowerGraph::build(&g, k).unwrap();
                let undirected_cycles = gr.cycle_lengths();
                let functional: Vec<usize> = d
                    .functional_cycle_lengths()
                    .into_iter()
                    .filter(|&l| l >= 3)
                    .collect();
                assert_eq!(undirected_cycles, functional);
            }
        }
    }

    #[test]
    fn diameter_matches_all_pairs_on_trees() {
        for g in corpus() {
            for k in 2..=g.order() as u64 + 1 {
                let gr = KPowerGraph::build(&g, k).unwrap();
                if !gr.is_connected() {
                    assert_eq!(gr.diameter(), Err(Error::Disconnected));
                    continue;
                }
                let ecc = (0..g.order())
                    .map(|v| gr.distances_from(v).unwrap().into_iter().flatten().max().unwrap())
                    .max()
                    .unwrap();
                assert_eq!(gr.diameter(), Ok(ecc));
            }
        }
    }
}
