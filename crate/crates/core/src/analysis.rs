//! Closed-form parameters and characterization criteria for k-power graphs,
//! each next to the graph computation it is meant to agree with.
//!
//! Functions here never reconcile a disagreement: [`analyze`] records every
//! mismatch in [`AnalysisReport::discrepancies`], and the `verify` module
//! turns them into counterexamples.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{normalize_exponent, ComponentShape, KPowerGraph};
use crate::groups::{FiniteGroup, GroupSpec};
use crate::number_theory::{
    divides_some_power, divisors, euler_phi, gcd_or_zero, is_primitive_root,
    least_power_divisible, multiplicative_order, pow_mod, prime_set, tau,
};

fn check_exponent(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::ExponentTooSmall(k))
    } else {
        Ok(())
    }
}

/// `(k^2 - 1) mod n` without overflow.
fn k_squared_minus_one_mod(k: u64, n: u64) -> u64 {
    (pow_mod(k, 2, n) + n - 1) % n
}

/// Inputs of the edge-count formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCountInputs {
    pub n: u64,
    pub k: u64,
    /// `gcd(k - 1, n)`
    pub k1: u64,
    /// `gcd(k^2 - 1, n)`
    pub k2: u64,
    pub census: BTreeMap<u64, u64>,
}

impl EdgeCountInputs {
    pub fn new(g: &FiniteGroup, k: u64) -> Result<Self> {
        check_exponent(k)?;
        let n = g.order() as u64;
        Ok(EdgeCountInputs {
            n,
            k,
            k1: gcd_or_zero((k - 1) % n, n),
            k2: gcd_or_zero(k_squared_minus_one_mod(k, n), n),
            census: g.order_census(),
        })
    }

    /// `n - sum_{d | k1} t_d - sum_{d | k2, d !| k1} t_d / 2`.
    pub fn evaluate(&self) -> Result<u64> {
        let mut fixed = 0;
        let mut swapped = 0;
        for (&d, &t) in &self.census {
            if self.k1 % d == 0 {
                fixed += t;
            } else if self.k2 % d == 0 {
                if t % 2 != 0 {
                    return Err(Error::Census(format!(
                        "odd number ({t}) of elements of order {d}"
                    )));
                }
                swapped += t / 2;
            }
        }
        Ok(self.n - fixed - swapped)
    }
}

/// Edge count from the order census.
pub fn edge_count_formula(g: &FiniteGroup, k: u64) -> Result<u64> {
    EdgeCountInputs::new(g, k)?.evaluate()
}

/// Edge count of `P(Z_n, k)` with `phi(d)` in place of the census.
pub fn edge_count_cyclic(n: u64, k: u64) -> Result<u64> {
    check_exponent(k)?;
    if n == 0 {
        return Err(Error::Unsupported("n must be positive".into()));
    }
    let k1 = gcd_or_zero((k - 1) % n, n);
    let k2 = gcd_or_zero(k_squared_minus_one_mod(k, n), n);
    let mut edges = n;
    for d in divisors(n) {
        if k1 % d == 0 {
            edges -= euler_phi(d);
        } else if k2 % d == 0 {
            edges -= euler_phi(d) / 2;
        }
    }
    Ok(edges)
}

fn additive_order(n: u64, a: u64) -> u64 {
    n / gcd_or_zero(a % n, n)
}

/// Four-case degree formula for vertex `a` of `P(Z_n, k)`, keyed on
/// `d = gcd(n, k)` dividing `a`, `ka = a (mod n)` and `o(a) | k - 1`.
///
/// This is the formula as usually stated. It disagrees with the graph on
/// vertices of 2-cycles (`k^2 a = a` but `ka != a`), where the successor is
/// also a predecessor and gets counted twice; see
/// [`degree_cyclic_corrected`].
pub fn degree_cyclic(n: u64, k: u64, a: u64) -> u64 {
    let d = gcd_or_zero(n, k % n);
    let fixed = mul_mod_n(k, a, n) == a % n;
    let order_divides = (k - 1) % additive_order(n, a) == 0;
    if a % d != 0 {
        return if order_divides { 0 } else { 1 };
    }
    match (fixed, order_divides) {
        (true, true) => d - 1,
        (false, true) | (true, false) => d,
        (false, false) => d + 1,
    }
}

/// [`degree_cyclic`] minus the double count on 2-cycles.
pub fn degree_cyclic_corrected(n: u64, k: u64, a: u64) -> u64 {
    let deg = degree_cyclic(n, k, a);
    let once = mul_mod_n(k, a, n);
    let twice = mul_mod_n(k, once, n);
    if once != a % n && twice == a % n {
        deg - 1
    } else {
        deg
    }
}

fn mul_mod_n(k: u64, a: u64, n: u64) -> u64 {
    ((k as u128 * a as u128) % n as u128) as u64
}

/// Connectivity from element orders, with the diameter bound when connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityCriterion {
    pub holds: bool,
    /// `2 * max_x n_x` with `n_x = min { m : o(x) | k^m }`.
    pub diameter_bound: Option<u64>,
}

/// Connected iff every element order divides some power of `k`.
pub fn is_connected_criterion(g: &FiniteGroup, k: u64) -> ConnectivityCriterion {
    let mut max_steps = 0u32;
    for &o in g.element_orders() {
        match least_power_divisible(o, k) {
            Some(m) => max_steps = max_steps.max(m),
            None => {
                return ConnectivityCriterion {
                    holds: false,
                    diameter_bound: None,
                }
            }
        }
    }
    ConnectivityCriterion {
        holds: true,
        diameter_bound: Some(2 * max_steps as u64),
    }
}

/// `pi(n) \ pi(k)` is empty.
pub fn is_connected_cyclic_pi(n: u64, k: u64) -> bool {
    prime_set(n).primes().iter().all(|&p| k % p == 0)
}

/// `n | k^m` for some `m`.
pub fn is_connected_cyclic_power(n: u64, k: u64) -> bool {
    divides_some_power(n, k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueNumber {
    pub omega: u8,
    /// Some element order `m > 3` has `m | k^3 - 1` and `m !| k - 1`.
    pub criterion_holds: bool,
    pub triangle: Option<[usize; 3]>,
}

/// Orders `m > 3` with `k^3 = 1` but `k != 1 (mod m)`.
pub fn clique_criterion(g: &FiniteGroup, k: u64) -> bool {
    g.order_census()
        .keys()
        .any(|&m| m > 3 && pow_mod(k, 3, m) == 1 && k % m != 1)
}

fn find_triangle(gr: &KPowerGraph) -> Option<[usize; 3]> {
    for u in 0..gr.group_order() {
        for &v in gr.neighbors(u) {
            let v = v as usize;
            if v <= u {
                continue;
            }
            let (a, b) = if gr.degree(u) <= gr.degree(v) { (u, v) } else { (v, u) };
            for &w in gr.neighbors(a) {
                let w = w as usize;
                if w > v && gr.has_edge(b, w) {
                    return Some([u, v, w]);
                }
            }
        }
    }
    None
}

pub fn clique_number(gr: &KPowerGraph, g: &FiniteGroup) -> CliqueNumber {
    let triangle = find_triangle(gr);
    let omega = match (gr.edge_count(), triangle) {
        (0, _) => 1,
        (_, Some(_)) => 3,
        _ => 2,
    };
    CliqueNumber {
        omega,
        criterion_holds: clique_criterion(g, gr.k_raw()),
        triangle,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub chi: u8,
    /// Colors in `1..=chi`, by vertex.
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn is_proper(&self, gr: &KPowerGraph) -> bool {
        gr.edges()
            .into_iter()
            .all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen = [false; 256];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }
}

/// Greedy coloring in BFS order from the least vertex of each component.
///
/// Every vertex sees at most two colored neighbors when dequeued (its
/// parent and, on an odd cycle, the closing edge), so three colors suffice
/// and bipartite components get exactly two.
pub fn chromatic(gr: &KPowerGraph) -> Coloring {
    let n = gr.group_order();
    let mut colors = vec![0u8; n];
    for start in 0..n {
        if colors[start] != 0 {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        let mut queued = vec![start];
        colors[start] = u8::MAX;
        while let Some(v) = queue.pop_front() {
            let mut used = [false; 4];
            for &w in gr.neighbors(v) {
                let c = colors[w as usize];
                if (1..=3).contains(&c) {
                    used[c as usize] = true;
                } else if c == 0 {
                    colors[w as usize] = u8::MAX;
                    queued.push(w as usize);
                    queue.push_back(w as usize);
                }
            }
            colors[v] = (1..=3u8).find(|&c| !used[c as usize]).unwrap_or(4);
        }
        debug_assert!(queued.iter().all(|&v| colors[v] <= 3));
    }
    let chi = colors.iter().copied().max().unwrap_or(1).max(1);
    Coloring { chi, colors }
}

/// No odd cycle of length 5 or more.
///
/// In a pseudoforest the only cycles are the component cycles, and an odd
/// antihole on 7+ vertices has more edges than vertices, so odd holes are
/// the only possible obstruction.
pub fn is_perfect(gr: &KPowerGraph) -> bool {
    gr.cycle_lengths().iter().all(|&l| l % 2 == 0 || l < 5)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarCase {
    AllOrdersDivideK,
    Z4K2,
    Q8K2Or6,
    NotStar,
}

/// Which branch of the star characterization applies.
///
/// `Z_4` is recognized as the order-4 group with an element of order 4 and
/// `Q_8` as the order-8 group with a unique involution and no element of
/// order 8. Exponents are compared after normalization mod `o(G)`.
pub fn star_criterion(g: &FiniteGroup, k: u64) -> StarCase {
    let n = g.order();
    let orders = g.element_orders();
    let kn = normalize_exponent(k, n);
    if n >= 2 && orders.iter().all(|&o| k % o == 0) {
        return StarCase::AllOrdersDivideK;
    }
    let census = g.order_census();
    if n == 4 && census.contains_key(&4) && kn == 2 {
        return StarCase::Z4K2;
    }
    if n == 8 && census.get(&2) == Some(&1) && !census.contains_key(&8) && (kn == 2 || kn == 6) {
        return StarCase::Q8K2Or6;
    }
    StarCase::NotStar
}

/// One vertex adjacent to all others and no other edges; needs `n >= 2`.
pub fn is_star_graph(gr: &KPowerGraph) -> bool {
    let n = gr.group_order();
    n >= 2 && gr.edge_count() == n - 1 && (0..n).any(|v| gr.degree(v) == n - 1)
}

pub fn is_star(g: &FiniteGroup, k: u64) -> Result<(bool, StarCase)> {
    let gr = KPowerGraph::build(g, k)?;
    Ok((is_star_graph(&gr), star_criterion(g, k)))
}

/// Every element order divides `k - 1`.
pub fn is_empty_graph(g: &FiniteGroup, k: u64) -> Result<bool> {
    check_exponent(k)?;
    Ok(g.element_orders().iter().all(|&o| (k - 1) % o == 0))
}

/// No element order `m > 1` with `gcd(k, m) = 1` and `ord_m(k) > 2`.
pub fn forest_criterion(g: &FiniteGroup, k: u64) -> bool {
    !g.order_census().keys().any(|&m| {
        m > 1 && gcd_or_zero(k % m, m) == 1 && multiplicative_order(k, m).is_ok_and(|t| t > 2)
    })
}

/// `(graph is acyclic, criterion holds)`.
pub fn is_forest(g: &FiniteGroup, gr: &KPowerGraph) -> (bool, bool) {
    (!gr.has_cycle(), forest_criterion(g, gr.k_raw()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentCount {
    pub count: usize,
    pub tau: u64,
    /// `k` is a primitive root modulo every divisor of `n`.
    pub equality_criterion: bool,
}

impl ComponentCount {
    pub fn consistent(&self) -> bool {
        self.count as u64 >= self.tau && ((self.count as u64 == self.tau) == self.equality_criterion)
    }
}

/// Component count of `P(Z_n, k)` against `tau(n)`, for coprime `n`, `k`.
pub fn component_count_cyclic(n: u64, k: u64) -> Result<ComponentCount> {
    check_exponent(k)?;
    if gcd_or_zero(n, k) != 1 {
        return Err(Error::Hypothesis(format!("gcd({n}, {k}) != 1")));
    }
    let g = FiniteGroup::build(GroupSpec::Cyclic(n))?;
    let gr = KPowerGraph::build(&g, k)?;
    Ok(ComponentCount {
        count: gr.components().len(),
        tau: tau(n),
        equality_criterion: divisors(n).into_iter().all(|d| is_primitive_root(k, d)),
    })
}

/// Whether every edge joins elements of equal order. `None` unless the
/// group is cyclic and `gcd(n, k) = 1`.
pub fn adjacency_preserves_order(gr: &KPowerGraph, g: &FiniteGroup) -> Option<bool> {
    let n = g.order() as u64;
    if !g.spec().is_cyclic_family() || gcd_or_zero(n, gr.k_raw()) != 1 {
        return None;
    }
    let orders = g.element_orders();
    Some(gr.edges().iter().all(|&(u, v)| orders[u] == orders[v]))
}

/// Every component is an isolated vertex, `K2` or a cycle.
pub fn shapes_elementary(gr: &KPowerGraph) -> bool {
    gr.components().iter().all(|c| c.shape.is_elementary())
}

/// Expected shape verdict for `P(Z_n, k)`: elementary iff `gcd(n, k) = 1`.
pub fn shapes_criterion_cyclic(n: u64, k: u64) -> bool {
    gcd_or_zero(n, k) == 1
}

/// Certificate that `P(Z_n, n/2)` is two stars and `P(Z_n, n/2 + 1)` a
/// perfect matching, for `n` even with `n/2` odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfOrderCertificate {
    pub n: u64,
    /// Centers of the two stars `K_{1, n/2 - 1}`.
    pub star_centers: [usize; 2],
    pub leaves_per_star: usize,
    /// The `n/2` edges `{a, a + n/2}`.
    pub matching: Vec<(usize, usize)>,
}

pub fn half_order_structures(n: u64) -> Result<HalfOrderCertificate> {
    if n < 6 || n % 2 != 0 || (n / 2) % 2 != 1 {
        return Err(Error::Hypothesis(format!(
            "need n even, n/2 odd, n >= 6; got {n}"
        )));
    }
    let half = (n / 2) as usize;
    let g = FiniteGroup::build(GroupSpec::Cyclic(n))?;
    let mismatch = |what: String| Err(Error::StructureMismatch(format!("n={n}: {what}")));

    let stars = KPowerGraph::build(&g, n / 2)?;
    let comps = stars.components();
    if comps.len() != 2 {
        return mismatch(format!("k=n/2 has {} components", comps.len()));
    }
    let mut centers = [0usize; 2];
    for (slot, c) in comps.iter().enumerate() {
        let center = c.vertices.iter().copied().find(|&v| stars.degree(v) == half - 1);
        let leaves_ok = c
            .vertices
            .iter()
            .all(|&v| Some(v) == center || (stars.degree(v) == 1));
        match center {
            Some(center) if c.vertex_count == half && c.edge_count == half - 1 && leaves_ok => {
                centers[slot] = center;
            }
            _ => return mismatch(format!("component {slot} of k=n/2 is not K_1,{}", half - 1)),
        }
    }
    if centers != [0, half] {
        return mismatch(format!("star centers {centers:?}"));
    }

    let matching = KPowerGraph::build(&g, n / 2 + 1)?;
    let expected: Vec<(usize, usize)> = (0..half).map(|a| (a, a + half)).collect();
    if matching.edges() != expected {
        return mismatch("k=n/2+1 is not the matching {a, a+n/2}".into());
    }
    if matching.components().len() != half {
        return mismatch("k=n/2+1 leaves vertices uncovered".into());
    }
    Ok(HalfOrderCertificate {
        n,
        star_centers: centers,
        leaves_per_star: half - 1,
        matching: expected,
    })
}

/// Shape census entry, e.g. six cycles of length 5.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeCount {
    #[serde(flatten)]
    pub shape: ComponentShape,
    pub vertices: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicReport {
    pub pi_criterion_holds: bool,
    pub power_criterion_holds: bool,
    pub is_tree: bool,
    pub tau: u64,
    /// Present when `gcd(n, k) = 1`.
    pub primitive_root_criterion: Option<bool>,
    pub order_adjacency_holds: Option<bool>,
    pub shapes_elementary: bool,
    pub shapes_criterion_holds: bool,
    /// Vertices where the four-case degree formula misses the graph degree.
    pub degree_formula_mismatches: usize,
    /// `two_stars` for `k = n/2`, `matching` for `k = n/2 + 1`, when `n/2` is odd.
    pub half_order_structure: Option<String>,
}

/// Every parameter and criterion for one `(G, k)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: usize,
    pub k: u64,
    pub k_normalized: u64,
    pub edges: usize,
    pub edge_count_formula: u64,
    pub degree_sequence: Vec<usize>,
    pub components: usize,
    pub component_shapes: Vec<ShapeCount>,
    pub is_connected: bool,
    pub connectivity_criterion_holds: bool,
    pub diameter: Option<usize>,
    pub diameter_bound: Option<u64>,
    pub clique_number: u8,
    pub clique_criterion_holds: bool,
    pub chromatic_number: u8,
    pub is_forest: bool,
    pub forest_criterion_holds: bool,
    pub is_star: bool,
    pub star_criterion_case: StarCase,
    pub is_empty: bool,
    pub empty_criterion_holds: bool,
    pub is_perfect: bool,
    pub cyclic: Option<CyclicReport>,
    pub discrepancies: Vec<String>,
}

fn shape_census(gr: &KPowerGraph) -> Vec<ShapeCount> {
    let mut census: BTreeMap<(ComponentShape, usize), usize> = BTreeMap::new();
    for c in gr.components() {
        *census.entry((c.shape, c.vertex_count)).or_insert(0) += 1;
    }
    census
        .into_iter()
        .map(|((shape, vertices), count)| ShapeCount {
            shape,
            vertices,
            count,
        })
        .collect()
}

pub fn analyze(g: &FiniteGroup, k: u64) -> Result<AnalysisReport> {
    let gr = KPowerGraph::build(g, k)?;
    let n = g.order();
    let mut issues = vec![];

    let edge_count_formula = edge_count_formula(g, k)?;
    let edges = gr.edge_count();
    if edge_count_formula != edges as u64 {
        issues.push(format!("edge count: formula {edge_count_formula}, graph {edges}"));
    }

    let components = gr.components();
    let is_connected = components.len() <= 1;
    let conn = is_connected_criterion(g, k);
    if conn.holds != is_connected {
        issues.push(format!("connectivity: criterion {}, graph {is_connected}", conn.holds));
    }
    let diameter = if is_connected { gr.diameter().ok() } else { None };
    if let (Some(d), Some(b)) = (diameter, conn.diameter_bound) {
        if d as u64 > b {
            issues.push(format!("diameter {d} exceeds bound {b}"));
        }
    }

    let clique = clique_number(&gr, g);
    if (clique.omega == 3) != clique.criterion_holds {
        issues.push(format!(
            "clique: omega {}, criterion {}",
            clique.omega, clique.criterion_holds
        ));
    }
    let coloring = chromatic(&gr);
    if coloring.chi > 3 || !coloring.is_proper(&gr) || coloring.distinct_colors() != coloring.chi as usize {
        issues.push(format!("coloring with {} colors is not a valid optimum", coloring.chi));
    }

    let (is_forest, forest_holds) = is_forest(g, &gr);
    if is_forest != forest_holds {
        issues.push(format!("forest: graph {is_forest}, criterion {forest_holds}"));
    }
    let is_star = is_star_graph(&gr);
    let star_case = star_criterion(g, k);
    if is_star != (star_case != StarCase::NotStar) {
        issues.push(format!("star: graph {is_star}, criterion {star_case:?}"));
    }
    let is_empty = edges == 0;
    let empty_holds = is_empty_graph(g, k)?;
    if is_empty != empty_holds {
        issues.push(format!("empty: graph {is_empty}, criterion {empty_holds}"));
    }

    let cyclic = match g.spec() {
        GroupSpec::Cyclic(nn) => Some(cyclic_report(*nn, k, g, &gr, is_connected, &mut issues)),
        _ => None,
    };

    Ok(AnalysisReport {
        group: g.spec().to_string(),
        order: n,
        k,
        k_normalized: gr.k(),
        edges,
        edge_count_formula,
        degree_sequence: gr.degree_sequence(),
        components: components.len(),
        component_shapes: shape_census(&gr),
        is_connected,
        connectivity_criterion_holds: conn.holds,
        diameter,
        diameter_bound: conn.diameter_bound,
        clique_number: clique.omega,
        clique_criterion_holds: clique.criterion_holds,
        chromatic_number: coloring.chi,
        is_forest,
        forest_criterion_holds: forest_holds,
        is_star,
        star_criterion_case: star_case,
        is_empty,
        empty_criterion_holds: empty_holds,
        is_perfect: is_perfect(&gr),
        cyclic,
        discrepancies: issues,
    })
}

fn cyclic_report(
    n: u64,
    k: u64,
    g: &FiniteGroup,
    gr: &KPowerGraph,
    is_connected: bool,
    issues: &mut Vec<String>,
) -> CyclicReport {
    let pi = is_connected_cyclic_pi(n, k);
    let power = is_connected_cyclic_power(n, k);
    if pi != is_connected || power != is_connected {
        issues.push(format!(
            "cyclic connectivity: prime-set {pi}, power {power}, graph {is_connected}"
        ));
    }
    let is_tree = is_connected && gr.edge_count() + 1 == gr.group_order();
    if is_connected && !is_tree {
        issues.push("connected but not a tree".into());
    }

    let coprime = gcd_or_zero(n, k) == 1;
    let primitive_root_criterion = coprime.then(|| {
        let count = ComponentCount {
            count: gr.components().len(),
            tau: tau(n),
            equality_criterion: divisors(n).into_iter().all(|d| is_primitive_root(k, d)),
        };
        if !count.consistent() {
            issues.push(format!(
                "component count {} vs tau {} with primitive-root criterion {}",
                count.count, count.tau, count.equality_criterion
            ));
        }
        count.equality_criterion
    });
    let order_adjacency = adjacency_preserves_order(gr, g);
    if order_adjacency == Some(false) {
        issues.push("edge joins elements of different order".into());
    }

    let elementary = shapes_elementary(gr);
    let shapes_holds = shapes_criterion_cyclic(n, k);
    if elementary != shapes_holds {
        issues.push(format!(
            "component shapes: elementary {elementary}, gcd criterion {shapes_holds}"
        ));
    }

    let mismatches = (0..n)
        .filter(|&a| degree_cyclic(n, k, a) != gr.degree(a as usize) as u64)
        .count();
    if mismatches > 0 {
        issues.push(format!("degree formula misses {mismatches} vertices"));
    }

    let half_order_structure = if n >= 6 && n % 4 == 2 {
        let kn = gr.k();
        if kn == n / 2 {
            Some("two_stars".to_string())
        } else if kn == n / 2 + 1 {
            Some("matching".to_string())
        } else {
            None
        }
    } else {
        None
    };

    CyclicReport {
        pi_criterion_holds: pi,
        power_criterion_holds: power,
        is_tree,
        tau: tau(n),
        primitive_root_criterion,
        order_adjacency_holds: order_adjacency,
        shapes_elementary: elementary,
        shapes_criterion_holds: shapes_holds,
        degree_formula_mismatches: mismatches,
        half_order_structure,
    }
}
