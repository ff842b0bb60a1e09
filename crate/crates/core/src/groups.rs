//! Concrete finite groups with dense element indices.
//!
//! Canonical enumeration per family:
//!
//! * `cyclic:N` - residues `0..N` ascending; the operation is addition mod N.
//! * `sym:N` - permutations of `{1..N}` in lexicographic order of their
//!   one-line notation, so index 0 is the identity. Products compose right
//!   to left: `(p * q)(i) = p(q(i))`.
//! * `dihedral:N` (order 2N) - `a^i` for `i < N`, then `a^i b`, with
//!   `a^N = b^2 = 1` and `b a = a^-1 b`.
//! * `quaternion:N` (order 4N) - `a^i` for `i < 2N`, then `a^i b`, with
//!   `a^2N = 1`, `b^2 = a^N` and `b a = a^-1 b`.
//! * `product:N1xN2x...` - tuples in lexicographic order (first coordinate
//!   most significant), componentwise addition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::number_theory::{divisors, Factorization};

/// Largest supported group order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Largest supported symmetric degree (8! = 40320 elements).
pub const MAX_SYMMETRIC_DEGREE: u32 = 8;

/// Groups strictly below this order carry a precomputed Cayley table.
const TABLE_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    Symmetric(u32),
    Dihedral(u64),
    Quaternion(u64),
    Product(Vec<u64>),
}

impl GroupSpec {
    /// Family-determined order, checked against [`MAX_ORDER`].
    pub fn order(&self) -> Result<u64> {
        let order: u128 = match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    return Err(Error::Unsupported("cyclic order must be at least 1".into()));
                }
                *n as u128
            }
            GroupSpec::Symmetric(n) => {
                if *n == 0 {
                    return Err(Error::Unsupported("symmetric degree must be at least 1".into()));
                }
                if *n > MAX_SYMMETRIC_DEGREE {
                    return Err(Error::Unsupported(format!(
                        "symmetric degree {n} above {MAX_SYMMETRIC_DEGREE}"
                    )));
                }
                (1..=*n as u128).product()
            }
            GroupSpec::Dihedral(n) => {
                if *n == 0 {
                    return Err(Error::Unsupported("dihedral parameter must be at least 1".into()));
                }
                2 * *n as u128
            }
            GroupSpec::Quaternion(n) => {
                if *n < 2 {
                    return Err(Error::Unsupported("quaternion parameter must be at least 2".into()));
                }
                4 * *n as u128
            }
            GroupSpec::Product(moduli) => {
                if moduli.is_empty() {
                    return Err(Error::Unsupported("product needs at least one factor".into()));
                }
                let mut acc: u128 = 1;
                for &m in moduli {
                    if m == 0 {
                        return Err(Error::Unsupported("product moduli must be at least 1".into()));
                    }
                    acc = acc.saturating_mul(m as u128);
                }
                acc
            }
        };
        if order > MAX_ORDER as u128 {
            return Err(Error::OrderTooLarge {
                order,
                limit: MAX_ORDER,
            });
        }
        Ok(order as u64)
    }

    pub fn is_cyclic_family(&self) -> bool {
        matches!(self, GroupSpec::Cyclic(_))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            GroupSpec::Product(ms) => {
                let parts: Vec<String> = ms.iter().map(u64::to_string).collect();
                write!(f, "product:{}", parts.join("x"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(s.to_string());
        let (family, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |p: &str| p.trim().parse::<u64>().map_err(|_| bad());
        let spec = match family.trim() {
            "cyclic" => GroupSpec::Cyclic(num(params)?),
            "sym" => {
                let n = num(params)?;
                GroupSpec::Symmetric(u32::try_from(n).map_err(|_| bad())?)
            }
            "dihedral" => GroupSpec::Dihedral(num(params)?),
            "quaternion" => GroupSpec::Quaternion(num(params)?),
            "product" => GroupSpec::Product(
                params
                    .split(['x', 'X'])
                    .map(num)
                    .collect::<Result<Vec<_>>>()?,
            ),
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

/// Dense index of a group element, in `[0, order)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementIndex(u32);

impl ElementIndex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone)]
enum Realization {
    Cyclic { n: usize },
    Symmetric { degree: usize, perms: Vec<[u8; 8]> },
    Dihedral { n: usize },
    Quaternion { n: usize },
    Product { moduli: Vec<usize> },
}

impl Realization {
    fn mul(&self, x: usize, y: usize) -> usize {
        match self {
            Realization::Cyclic { n } => (x + y) % n,
            Realization::Symmetric { degree, perms } => {
                let (p, q) = (&perms[x], &perms[y]);
                let mut r = [0u8; 8];
                for i in 0..*degree {
                    r[i] = p[q[i] as usize];
                }
                lehmer_rank(&r[..*degree])
            }
            Realization::Dihedral { n } => {
                let (i, s) = (x % n, x / n);
                let (j, t) = (y % n, y / n);
                let e = if s == 0 { i + j } else { i + n - j };
                (e % n) + n * ((s + t) % 2)
            }
            Realization::Quaternion { n } => {
                let m = 2 * n;
                let (i, s) = (x % m, x / m);
                let (j, t) = (y % m, y / m);
                match (s, t) {
                    (0, _) => (i + j) % m + m * t,
                    (_, 0) => (i + m - j) % m + m,
                    // a^i b a^j b = a^(i-j) b^2 = a^(i-j+n)
                    _ => (i + m - j + n) % m,
                }
            }
            Realization::Product { moduli } => {
                let mut rx = x;
                let mut ry = y;
                let mut out = 0;
                let mut stride = 1;
                for &m in moduli.iter().rev() {
                    let c = (rx % m + ry % m) % m;
                    out += c * stride;
                    stride *= m;
                    rx /= m;
                    ry /= m;
                }
                out
            }
        }
    }
}

fn lehmer_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&v| v < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn lexicographic_perms(degree: usize) -> Vec<[u8; 8]> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..degree as u8).collect();
    loop {
        let mut a = [0u8; 8];
        a[..degree].copy_from_slice(&cur);
        out.push(a);
        // next permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// A fully materialized finite group. Immutable once built.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    spec: GroupSpec,
    order: usize,
    identity: ElementIndex,
    element_orders: Vec<u64>,
    realization: Realization,
    table: Option<Vec<u32>>,
}

/// `o(a) = n / gcd(a, n)`, by marking multiples of each divisor in ascending order.
fn cyclic_orders(n: u64) -> Vec<u64> {
    let n_us = n as usize;
    let mut g = vec![1u64; n_us];
    for d in divisors(n) {
        for x in (0..n_us).step_by(d as usize) {
            g[x] = d;
        }
    }
    g.into_iter().map(|d| n / d).collect()
}

impl FiniteGroup {
    pub fn build(spec: GroupSpec) -> Result<Self> {
        let order = spec.order()? as usize;
        let realization = match &spec {
            GroupSpec::Cyclic(n) => Realization::Cyclic { n: *n as usize },
            GroupSpec::Symmetric(d) => Realization::Symmetric {
                degree: *d as usize,
                perms: lexicographic_perms(*d as usize),
            },
            GroupSpec::Dihedral(n) => Realization::Dihedral { n: *n as usize },
            GroupSpec::Quaternion(n) => Realization::Quaternion { n: *n as usize },
            GroupSpec::Product(ms) => Realization::Product {
                moduli: ms.iter().map(|&m| m as usize).collect(),
            },
        };
        let table = (order < TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(order * order);
            for x in 0..order {
                for y in 0..order {
                    t.push(realization.mul(x, y) as u32);
                }
            }
            t
        });
        let mut group = FiniteGroup {
            spec,
            order,
            // every canonical enumeration starts with the identity
            identity: ElementIndex(0),
            element_orders: Vec::new(),
            realization,
            table,
        };
        group.element_orders = match group.spec {
            GroupSpec::Cyclic(n) => cyclic_orders(n),
            _ => group.orders_by_descent(),
        };
        Ok(group)
    }

    fn orders_by_descent(&self) -> Vec<u64> {
        let primes: Vec<u64> = Factorization::of(self.order as u64).primes().collect();
        (0..self.order)
            .map(|x| self.order_by_descent(x, &primes))
            .collect()
    }

    fn order_by_descent(&self, x: usize, primes: &[u64]) -> u64 {
        let mut t = self.order as u64;
        for &p in primes {
            while t % p == 0 && self.pow_raw(x, t / p) == self.identity.index() {
                t /= p;
            }
        }
        t
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementIndex {
        self.identity
    }

    /// Checked conversion from a raw index.
    pub fn element(&self, idx: usize) -> Result<ElementIndex> {
        if idx < self.order {
            Ok(ElementIndex(idx as u32))
        } else {
            Err(Error::IndexOutOfRange {
                index: idx,
                order: self.order,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementIndex> + '_ {
        (0..self.order as u32).map(ElementIndex)
    }

    pub fn op(&self, x: ElementIndex, y: ElementIndex) -> Result<ElementIndex> {
        self.element(x.index())?;
        self.element(y.index())?;
        Ok(ElementIndex(self.mul_raw(x.index(), y.index()) as u32))
    }

    /// `x^k` by repeated squaring; `x^0` is the identity.
    pub fn power(&self, x: ElementIndex, k: u64) -> Result<ElementIndex> {
        self.element(x.index())?;
        Ok(ElementIndex(self.pow_raw(x.index(), k) as u32))
    }

    pub fn element_order(&self, x: ElementIndex) -> Result<u64> {
        self.element(x.index())?;
        Ok(self.element_orders[x.index()])
    }

    /// Orders of all elements, by index.
    pub fn element_orders(&self) -> &[u64] {
        &self.element_orders
    }

    /// Number of elements of each order.
    pub fn order_census(&self) -> BTreeMap<u64, u64> {
        let mut census = BTreeMap::new();
        for &o in &self.element_orders {
            *census.entry(o).or_insert(0) += 1;
        }
        census
    }

    /// Human-readable name of an element under the canonical realization.
    pub fn element_name(&self, x: ElementIndex) -> String {
        let x = x.index();
        match &self.realization {
            Realization::Cyclic { .. } => x.to_string(),
            Realization::Symmetric { degree, perms } => cycle_notation(&perms[x][..*degree]),
            Realization::Dihedral { n } => word(x % n, x / n),
            Realization::Quaternion { n } => word(x % (2 * n), x / (2 * n)),
            Realization::Product { moduli } => {
                let mut coords = Vec::with_capacity(moduli.len());
                let mut r = x;
                for &m in moduli.iter().rev() {
                    coords.push(r % m);
                    r /= m;
                }
                coords.reverse();
                let parts: Vec<String> = coords.iter().map(usize::to_string).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    pub(crate) fn mul_raw(&self, x: usize, y: usize) -> usize {
        match &self.table {
            Some(t) => t[x * self.order + y] as usize,
            None => self.realization.mul(x, y),
        }
    }

    pub(crate) fn pow_raw(&self, x: usize, mut k: u64) -> usize {
        let mut result = self.identity.index();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul_raw(result, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul_raw(base, base);
            }
        }
        result
    }
}

fn word(i: usize, s: usize) -> String {
    let a = match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    };
    match (a.is_empty(), s) {
        (true, 0) => "e".to_string(),
        (false, 0) => a,
        _ => format!("{a}b"),
    }
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![];
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}
