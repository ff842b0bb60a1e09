//! The shifting-chair riddle.
//!
//! `n` people numbered `1..=n` sit clockwise in `n` chairs. After each
//! whistle, person `p` moves `p` chairs clockwise (skipping `p - 1`). After
//! whistle `w`, person `p` sits in chair `w * p mod n`, so whistle `w` is the
//! directed `w`-power graph of `Z_n` and a perfect seating is a bijective
//! power map.
//!
//! Chairs and people are indexed by residues `0..n`: person `p` is residue
//! `p mod n`, so person `n` is residue 0. User-facing output uses person
//! numbers and chair residues.
//!
//! The riddle's wording also admits a reading where person `p` advances
//! `p - 1` chairs. That variant is not implemented.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::DirectedKPowerGraph;
use crate::groups::{FiniteGroup, GroupSpec};
use crate::number_theory::gcd_or_zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChairConfig {
    n: u64,
}

impl ChairConfig {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Unsupported("need at least one chair".into()));
        }
        GroupSpec::Cyclic(n).order()?;
        Ok(ChairConfig { n })
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// A chair whose occupancy is not exactly one at a rejected whistle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collision {
    pub whistle: u64,
    pub seat: usize,
    pub occupancy: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChairSolution {
    pub n: u64,
    pub minimal_k: u64,
    /// `seating[r]` is the chair of the person with residue `r`.
    pub seating: Vec<usize>,
    pub collision_trace: Vec<Collision>,
}

/// Person number for a residue.
pub fn person_number(residue: usize, n: u64) -> u64 {
    if residue == 0 {
        n
    } else {
        residue as u64
    }
}

/// `(in_degree, out_degree)` per chair in the directed `k`-power graph of `Z_n`.
pub fn degree_profile(n: u64, k: u64) -> Result<Vec<(usize, usize)>> {
    let g = FiniteGroup::build(GroupSpec::Cyclic(n))?;
    Ok(DirectedKPowerGraph::build(&g, k)?.degree_profile())
}

/// Least `k >= 2` coprime to `n`.
pub fn least_coprime_exponent(n: u64) -> u64 {
    (2..).find(|&k| gcd_or_zero(n, k) == 1).unwrap()
}

/// Seat positions whistle after whistle, advancing person `r` by `r` chairs.
#[derive(Debug, Clone)]
pub struct Whistles {
    n: usize,
    whistle: u64,
    seats: Vec<usize>,
}

impl Whistles {
    pub fn new(cfg: ChairConfig) -> Self {
        let n = cfg.n as usize;
        Whistles {
            n,
            whistle: 0,
            seats: vec![0; n],
        }
    }
}

impl Iterator for Whistles {
    /// Whistle number and `seats[r]` for every person residue `r`.
    type Item = (u64, Vec<usize>);

    fn next(&mut self) -> Option<Self::Item> {
        self.whistle += 1;
        for (r, seat) in self.seats.iter_mut().enumerate() {
            *seat = (*seat + r) % self.n;
        }
        Some((self.whistle, self.seats.clone()))
    }
}

fn occupancy(n: usize, seats: &[usize]) -> Vec<usize> {
    let mut occ = vec![0; n];
    for &s in seats {
        occ[s] += 1;
    }
    occ
}

/// Smallest whistle `k > 1` after which every chair holds one person.
///
/// Found by simulating the whistles, then checked against the directed
/// graph's degree profile and against the least exponent coprime to `n`.
pub fn solve_chairs(cfg: ChairConfig) -> Result<ChairSolution> {
    let n = cfg.n as usize;
    let mut collision_trace = vec![];
    let mut solved = None;
    // whistle n + 1 always seats everyone (it is the identity map)
    for (w, seats) in Whistles::new(cfg).take(n + 1).skip(1) {
        let occ = occupancy(n, &seats);
        match occ.iter().position(|&o| o != 1) {
            Some(seat) => collision_trace.push(Collision {
                whistle: w,
                seat,
                occupancy: occ[seat],
            }),
            None => {
                solved = Some((w, seats));
                break;
            }
        }
    }
    let (minimal_k, seating) = solved.ok_or_else(|| {
        Error::Discrepancy(format!("no perfect seating within {} whistles", n + 1))
    })?;

    let closed_form = least_coprime_exponent(cfg.n);
    if minimal_k != closed_form {
        return Err(Error::Discrepancy(format!(
            "n={}: simulation gives k={minimal_k}, least coprime k={closed_form}",
            cfg.n
        )));
    }
    if degree_profile(cfg.n, minimal_k)?.iter().any(|&d| d != (1, 1)) {
        return Err(Error::Discrepancy(format!(
            "n={}: k={minimal_k} seats everyone but the power map is not bijective",
            cfg.n
        )));
    }
    Ok(ChairSolution {
        n: cfg.n,
        minimal_k,
        seating,
        collision_trace,
    })
}

/// One line per whistle up to the solution, then `RESULT k=<k>`.
///
/// Each line lists `seat[j] <- person p` ordered by seat, then person.
pub fn render_trace(cfg: ChairConfig, solution: &ChairSolution) -> String {
    let mut out = String::new();
    for (w, seats) in Whistles::new(cfg).take(solution.minimal_k as usize) {
        let mut entries: Vec<(usize, u64)> = seats
            .iter()
            .enumerate()
            .map(|(r, &s)| (s, person_number(r, cfg.n)))
            .collect();
        entries.sort_unstable();
        let parts: Vec<String> = entries
            .iter()
            .map(|(s, p)| format!("seat[{s}] <- person {p}"))
            .collect();
        let _ = writeln!(out, "w={w}: {}", parts.join(", "));
    }
    let _ = writeln!(out, "RESULT k={}", solution.minimal_k);
    out
}
