//! Per-cell theorem checks and group-family corpora for verification sweeps.
//!
//! A cell is one `(G, k)` pair. Each [`Theorem`] compares a closed form or
//! number-theoretic criterion with the graph computed for that cell.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{
    adjacency_preserves_order, chromatic, clique_number, degree_cyclic, edge_count_cyclic,
    edge_count_formula, forest_criterion, half_order_structures, is_connected_criterion,
    is_connected_cyclic_pi, is_connected_cyclic_power, is_empty_graph, is_perfect,
    is_star_graph, shapes_criterion_cyclic, star_criterion, ComponentCount, StarCase,
};
use crate::chair::{degree_profile, solve_chairs, ChairConfig};
use crate::error::{Error, Result};
use crate::graph::{ComponentProfile, DirectedKPowerGraph, KPowerGraph};
use crate::groups::{FiniteGroup, GroupSpec, MAX_ORDER, MAX_SYMMETRIC_DEGREE};
use crate::number_theory::{divisors, gcd_or_zero, is_primitive_root, tau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Edges,
    Degrees,
    Connectivity,
    Clique,
    Chromatic,
    Forest,
    Star,
    Empty,
    Components,
    Shapes,
    OrderAdjacency,
    Thm16,
    Perfect,
    Chair,
}

impl Theorem {
    pub const ALL: [Theorem; 14] = [
        Theorem::Edges,
        Theorem::Degrees,
        Theorem::Connectivity,
        Theorem::Clique,
        Theorem::Chromatic,
        Theorem::Forest,
        Theorem::Star,
        Theorem::Empty,
        Theorem::Components,
        Theorem::Shapes,
        Theorem::OrderAdjacency,
        Theorem::Thm16,
        Theorem::Perfect,
        Theorem::Chair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Edges => "edges",
            Theorem::Degrees => "degrees",
            Theorem::Connectivity => "connectivity",
            Theorem::Clique => "clique",
            Theorem::Chromatic => "chromatic",
            Theorem::Forest => "forest",
            Theorem::Star => "star",
            Theorem::Empty => "empty",
            Theorem::Components => "components",
            Theorem::Shapes => "shapes",
            Theorem::OrderAdjacency => "order-adjacency",
            Theorem::Thm16 => "thm16",
            Theorem::Perfect => "perfect",
            Theorem::Chair => "chair",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| Error::InvalidSpec(format!("unknown theorem `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub theorem: Theorem,
    pub group: String,
    pub k: u64,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: group {} k={}: expected {}, got {}",
            self.theorem, self.group, self.k, self.expected, self.got
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Hypothesis does not apply to this cell.
    Skip,
    Fail(Counterexample),
}

/// One `(G, k)` pair with its graph and lazily computed components.
pub struct Cell<'a> {
    group: &'a FiniteGroup,
    k: u64,
    graph: KPowerGraph,
    components: OnceCell<Vec<ComponentProfile>>,
}

impl<'a> Cell<'a> {
    pub fn new(group: &'a FiniteGroup, k: u64) -> Result<Self> {
        Ok(Cell {
            group,
            k,
            graph: KPowerGraph::build(group, k)?,
            components: OnceCell::new(),
        })
    }

    pub fn graph(&self) -> &KPowerGraph {
        &self.graph
    }

    pub fn components(&self) -> &[ComponentProfile] {
        self.components.get_or_init(|| self.graph.components())
    }

    fn cyclic_n(&self) -> Option<u64> {
        match self.group.spec() {
            GroupSpec::Cyclic(n) => Some(*n),
            _ => None,
        }
    }

    fn fail(&self, theorem: Theorem, expected: impl fmt::Display, got: impl fmt::Display) -> Outcome {
        Outcome::Fail(Counterexample {
            theorem,
            group: self.group.spec().to_string(),
            k: self.k,
            expected: expected.to_string(),
            got: got.to_string(),
        })
    }

    fn expect<T: PartialEq + fmt::Display>(&self, theorem: Theorem, expected: T, got: T) -> Outcome {
        if expected == got {
            Outcome::Pass
        } else {
            self.fail(theorem, expected, got)
        }
    }

    pub fn check(&self, theorem: Theorem) -> Result<Outcome> {
        let gr = &self.graph;
        let g = self.group;
        let k = self.k;
        let connected = self.components().len() <= 1;
        let outcome = match theorem {
            Theorem::Edges => {
                let formula = edge_count_formula(g, k)?;
                if let Some(n) = self.cyclic_n() {
                    let cyc = edge_count_cyclic(n, k)?;
                    if cyc != formula {
                        return Ok(self.fail(theorem, format!("totient form {cyc}"), format!("census form {formula}")));
                    }
                }
                self.expect(theorem, formula, gr.edge_count() as u64)
            }
            Theorem::Degrees => match self.cyclic_n() {
                None => Outcome::Skip,
                Some(n) => match (0..n).find(|&a| degree_cyclic(n, k, a) != gr.degree(a as usize) as u64) {
                    None => Outcome::Pass,
                    Some(a) => self.fail(
                        theorem,
                        format!("deg({a}) = {}", degree_cyclic(n, k, a)),
                        format!("deg({a}) = {}", gr.degree(a as usize)),
                    ),
                },
            },
            Theorem::Connectivity => {
                let crit = is_connected_criterion(g, k);
                if crit.holds != connected {
                    return Ok(self.fail(theorem, format!("connected = {}", crit.holds), format!("connected = {connected}")));
                }
                if let Some(n) = self.cyclic_n() {
                    let pi = is_connected_cyclic_pi(n, k);
                    let pw = is_connected_cyclic_power(n, k);
                    if pi != connected || pw != connected {
                        return Ok(self.fail(
                            theorem,
                            format!("prime-set {pi}, power {pw}"),
                            format!("connected = {connected}"),
                        ));
                    }
                }
                if connected {
                    if gr.edge_count() + 1 != gr.group_order() {
                        return Ok(self.fail(theorem, "tree", format!("{} edges", gr.edge_count())));
                    }
                    let d = gr.diameter()? as u64;
                    let bound = crit.diameter_bound.unwrap_or(0);
                    if d > bound {
                        return Ok(self.fail(theorem, format!("diameter <= {bound}"), format!("diameter {d}")));
                    }
                }
                Outcome::Pass
            }
            Theorem::Clique => {
                let c = clique_number(gr, g);
                if c.omega > 3 {
                    self.fail(theorem, "omega <= 3", c.omega)
                } else {
                    self.expect(theorem, c.criterion_holds, c.omega == 3)
                }
            }
            Theorem::Chromatic => {
                let col = chromatic(gr);
                let odd_cycle = self
                    .components()
                    .iter()
                    .filter_map(ComponentProfile::cycle_length)
                    .any(|l| l % 2 == 1);
                let expected: u8 = if gr.edge_count() == 0 {
                    1
                } else if odd_cycle {
                    3
                } else {
                    2
                };
                if !col.is_proper(gr) || col.distinct_colors() != col.chi as usize {
                    self.fail(theorem, format!("proper {}-coloring", col.chi), "invalid coloring")
                } else {
                    self.expect(theorem, expected, col.chi)
                }
            }
            Theorem::Forest => {
                let acyclic = self.components().iter().all(|c| c.cycle_length().is_none());
                self.expect(theorem, forest_criterion(g, k), acyclic)
            }
            Theorem::Star => {
                let case = star_criterion(g, k);
                self.expect(theorem, case != StarCase::NotStar, is_star_graph(gr))
            }
            Theorem::Empty => self.expect(theorem, is_empty_graph(g, k)?, gr.edge_count() == 0),
            Theorem::Components => match self.cyclic_n() {
                Some(n) if gcd_or_zero(n, k) == 1 => {
                    let count = ComponentCount {
                        count: self.components().len(),
                        tau: tau(n),
                        equality_criterion: divisors(n).into_iter().all(|d| is_primitive_root(k, d)),
                    };
                    if count.consistent() {
                        Outcome::Pass
                    } else {
                        self.fail(
                            theorem,
                            format!(">= {} components, equality iff primitive roots ({})", count.tau, count.equality_criterion),
                            format!("{} components", count.count),
                        )
                    }
                }
                _ => Outcome::Skip,
            },
            Theorem::Shapes => {
                if let Some(c) = self.components().iter().find(|c| c.edge_count > c.vertex_count) {
                    return Ok(self.fail(theorem, "pseudoforest", format!("component with {} edges on {} vertices", c.edge_count, c.vertex_count)));
                }
                match self.cyclic_n() {
                    None => Outcome::Pass,
                    Some(n) => {
                        let elementary = self.components().iter().all(|c| c.shape.is_elementary());
                        if shapes_criterion_cyclic(n, k) {
                            self.expect(theorem, true, elementary)
                        } else if elementary && gr.edge_count() > 0 && !fixed_points_cover_edges(gr) {
                            self.fail(theorem, "a component beyond isolated, K2 and cycles", "only those shapes")
                        } else {
                            Outcome::Pass
                        }
                    }
                }
            }
            Theorem::OrderAdjacency => match adjacency_preserves_order(gr, g) {
                None => Outcome::Skip,
                Some(holds) => self.expect(theorem, true, holds),
            },
            Theorem::Thm16 => match self.cyclic_n() {
                Some(n) if n >= 6 && n % 4 == 2 && gr.k() == n / 2 => match half_order_structures(n) {
                    Ok(_) => Outcome::Pass,
                    Err(e) => self.fail(theorem, "two stars and a matching", e),
                },
                _ => Outcome::Skip,
            },
            Theorem::Perfect => {
                // independent route: odd cycles of the power map itself
                let directed = DirectedKPowerGraph::build(g, k)?;
                let no_odd_hole = directed
                    .functional_cycle_lengths()
                    .iter()
                    .all(|&l| l < 5 || l % 2 == 0);
                self.expect(theorem, no_odd_hole, is_perfect(gr))
            }
            Theorem::Chair => match self.cyclic_n() {
                None => Outcome::Skip,
                Some(n) => {
                    let bijective = degree_profile(n, k)?.iter().all(|&d| d == (1, 1));
                    if bijective != (gcd_or_zero(n, k) == 1) {
                        return Ok(self.fail(theorem, format!("bijective = {}", gcd_or_zero(n, k) == 1), format!("bijective = {bijective}")));
                    }
                    if k == 2 {
                        if let Err(e) = solve_chairs(ChairConfig::new(n)?) {
                            return Ok(self.fail(theorem, "consistent chair solution", e));
                        }
                    }
                    Outcome::Pass
                }
            },
        };
        Ok(outcome)
    }
}

/// Every edge has a fixed endpoint, i.e. `x^(k^2) = x^k` for all `x`.
///
/// With `gcd(n, k) > 1` only such graphs may consist of isolated vertices,
/// K2 components and cycles alone.
pub fn fixed_points_cover_edges(gr: &KPowerGraph) -> bool {
    let mut fixed = vec![false; gr.group_order()];
    for &v in gr.fixed_points() {
        fixed[v] = true;
    }
    gr.edges().into_iter().all(|(u, v)| fixed[u] || fixed[v])
}

/// Per-theorem tallies with the first counterexample seen.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cells: u64,
    pub theorems: BTreeMap<Theorem, Tally>,
}

impl Summary {
    pub fn record(&mut self, theorem: Theorem, outcome: Outcome) {
        let t = self.theorems.entry(theorem).or_default();
        match outcome {
            Outcome::Pass => t.passed += 1,
            Outcome::Skip => t.skipped += 1,
            Outcome::Fail(c) => {
                t.failed += 1;
                t.first_counterexample.get_or_insert(c);
            }
        }
    }

    /// Fold `other` in; earlier counterexamples win.
    pub fn merge(&mut self, other: Summary) {
        self.cells += other.cells;
        for (th, o) in other.theorems {
            let t = self.theorems.entry(th).or_default();
            t.passed += o.passed;
            t.failed += o.failed;
            t.skipped += o.skipped;
            if t.first_counterexample.is_none() {
                t.first_counterexample = o.first_counterexample;
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.theorems.values().all(|t| t.failed == 0)
    }
}

/// Exponents to sweep for a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KRange {
    /// `2..=o(G) + 1`, one exponent per distinct graph.
    All,
    Explicit { lo: u64, hi: u64 },
}

impl KRange {
    pub fn exponents(self, order: usize) -> std::ops::RangeInclusive<u64> {
        match self {
            KRange::All => 2..=order as u64 + 1,
            KRange::Explicit { lo, hi } => lo.max(2)..=hi,
        }
    }
}

impl FromStr for KRange {
    type Err = Error;

    /// `all`, `N` or `LO..HI` (inclusive).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "all" {
            return Ok(KRange::All);
        }
        let bad = || Error::InvalidSpec(format!("bad k range `{s}`"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (
                a.parse().map_err(|_| bad())?,
                b.trim_start_matches('=').parse().map_err(|_| bad())?,
            ),
            None => {
                let k = s.parse().map_err(|_| bad())?;
                (k, k)
            }
        };
        if lo < 2 || hi < lo {
            return Err(bad());
        }
        Ok(KRange::Explicit { lo, hi })
    }
}

/// Run `theorems` on every `k` in range for one group.
pub fn verify_group(g: &FiniteGroup, theorems: &[Theorem], ks: KRange) -> Result<Summary> {
    let mut summary = Summary::default();
    for k in ks.exponents(g.order()) {
        let cell = Cell::new(g, k)?;
        summary.cells += 1;
        for &t in theorems {
            summary.record(t, cell.check(t)?);
        }
    }
    Ok(summary)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cyclic,
    Symmetric,
    Dihedral,
    Quaternion,
    Product,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "cyclic" => Family::Cyclic,
            "sym" | "symmetric" => Family::Symmetric,
            "dihedral" => Family::Dihedral,
            "quaternion" => Family::Quaternion,
            "product" => Family::Product,
            other => return Err(Error::InvalidSpec(format!("unknown family `{other}`"))),
        })
    }
}

/// Groups of a family with parameter in `min..=max`.
///
/// The parameter is the family's spec parameter (`dihedral:N` has order
/// 2N). For products it bounds each factor, and `factors` bounds the number
/// of factors; tuples are nondecreasing with factors at least 2, since other
/// orderings give isomorphic groups.
pub fn family_specs(family: Family, min: u64, max: u64, factors: usize) -> Vec<GroupSpec> {
    let specs: Vec<GroupSpec> = match family {
        Family::Cyclic => (min.max(1)..=max).map(GroupSpec::Cyclic).collect(),
        Family::Symmetric => (min.max(1)..=max.min(MAX_SYMMETRIC_DEGREE as u64))
            .map(|n| GroupSpec::Symmetric(n as u32))
            .collect(),
        Family::Dihedral => (min.max(1)..=max).map(GroupSpec::Dihedral).collect(),
        Family::Quaternion => (min.max(2)..=max).map(GroupSpec::Quaternion).collect(),
        Family::Product => {
            let mut out = vec![];
            let lo = min.max(2);
            let mut stack: Vec<Vec<u64>> = (lo..=max).map(|m| vec![m]).collect();
            while let Some(t) = stack.pop() {
                if t.len() >= 2 {
                    out.push(t.clone());
                }
                if t.len() < factors {
                    let last = *t.last().unwrap();
                    for m in last..=max {
                        let mut next = t.clone();
                        next.push(m);
                        if next.iter().product::<u64>() <= MAX_ORDER {
                            stack.push(next);
                        }
                    }
                }
            }
            out.sort();
            out.into_iter().map(GroupSpec::Product).collect()
        }
    };
    specs.into_iter().filter(|s| s.order().is_ok()).collect()
}
