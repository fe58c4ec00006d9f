//! Brute-force ground truth over small prime fields.
//!
//! Maps are enumerated coefficient by coefficient and filtered by the
//! definitions themselves, without any linear algebra. Bilinear maps are
//! searched depth-first one pair value at a time, and each basis identity is
//! tested as soon as every value it reads is assigned, so a branch dies at
//! its first violated identity. Commuting maps are filtered by the
//! unlinearized condition `x · f(x) = 0` at every vector `x`.

use std::fmt;

use serde_json::{json, Value};

use num_traits::Zero;

use crate::field::Fp;
use crate::lie::LModule;
use crate::linalg::{SparseVec, Subspace};
use crate::maps::{pair_count, pair_slot, LinearMap, Symmetry};

pub const DEFAULT_MAX_UNKNOWNS: usize = 12;
/// Upper bound on `p^unknowns` for any budget.
pub const HARD_CEILING: u128 = 3u128.pow(20);
pub const BUDGET_ENV: &str = "LIEBIDER_MAX_UNKNOWNS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_unknowns: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_unknowns: DEFAULT_MAX_UNKNOWNS }
    }
}

impl EnumerationBudget {
    pub fn new(max_unknowns: usize) -> Self {
        EnumerationBudget { max_unknowns }
    }

    /// The default, overridden by `LIEBIDER_MAX_UNKNOWNS` when it parses.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::new)
            .unwrap_or_default()
    }

    fn check(&self, p: u64, unknowns: usize) -> Result<(), OracleError> {
        if unknowns > self.max_unknowns {
            return Err(OracleError::BudgetExceeded { unknowns, max: self.max_unknowns });
        }
        let worst = (p as u128).checked_pow(unknowns as u32);
        if worst.is_none_or(|w| w > HARD_CEILING) {
            return Err(OracleError::CeilingExceeded { p, unknowns });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    BudgetExceeded { unknowns: usize, max: usize },
    CeilingExceeded { p: u64, unknowns: usize },
    /// The accepted set is not a subspace (cannot happen for linear
    /// conditions; checked anyway).
    NotClosed { members: usize, span_dim: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { unknowns, max } => {
                write!(f, "{unknowns} unknowns exceed the enumeration budget of {max} (set {BUDGET_ENV})")
            }
            OracleError::CeilingExceeded { p, unknowns } => write!(f, "{p}^{unknowns} exceeds the hard ceiling"),
            OracleError::NotClosed { members, span_dim } => {
                write!(f, "{members} accepted maps do not form a subspace (span dim {span_dim})")
            }
        }
    }
}

impl std::error::Error for OracleError {}

#[derive(Debug, Clone)]
pub struct OracleResult<const P: u64> {
    /// Accepted coefficient vectors, in enumeration order.
    pub members: Vec<SparseVec<Fp<P>>>,
    pub space: Subspace<Fp<P>>,
    pub unknowns: usize,
    /// Search nodes visited (full assignments for the commuting filter).
    pub visited: u64,
}

impl<const P: u64> OracleResult<P> {
    pub fn to_json(&self) -> Value {
        json!({
            "p": P,
            "members": self.members.len(),
            "dim": self.space.dim(),
            "unknowns": self.unknowns,
            "visited": self.visited,
        })
    }
}

fn wrap<const P: u64>(members: Vec<SparseVec<Fp<P>>>, ambient: usize, unknowns: usize, visited: u64) -> Result<OracleResult<P>, OracleError> {
    let space = Subspace::from_sparse(ambient, members.iter()).expect("member lengths match");
    // the accepted set is a subspace iff it has exactly p^dim(span) elements
    let expected = (P as u128).pow(space.dim() as u32);
    if members.len() as u128 != expected {
        return Err(OracleError::NotClosed { members: members.len(), span_dim: space.dim() });
    }
    Ok(OracleResult { members, space, unknowns, visited })
}

/// All vectors of `F_p^len`, odometer order.
fn for_each_vector<const P: u64>(len: usize, mut f: impl FnMut(&[Fp<P>]) -> bool) {
    let mut v = vec![Fp::<P>::new(0); len];
    loop {
        if !f(&v) {
            return;
        }
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            let next = v[i].value() + 1;
            if next < P {
                v[i] = Fp::new(next);
                break;
            }
            v[i] = Fp::new(0);
            i += 1;
        }
    }
}

/// One basis identity: `Σ coeff · (action or identity) δ(a, b) = 0`, read
/// from the stored pair values.
struct Identity<const P: u64> {
    /// (pair index, sign, acting basis element or None, scalar)
    terms: Vec<(usize, Fp<P>, Option<usize>, Fp<P>)>,
    level: usize,
}

struct Search<'a, const P: u64> {
    m: &'a LModule<Fp<P>>,
    d: usize,
    npairs: usize,
    by_level: Vec<Vec<Identity<P>>>,
    values: Vec<Vec<Fp<P>>>,
    members: Vec<SparseVec<Fp<P>>>,
    visited: u64,
}

impl<const P: u64> Search<'_, P> {
    fn holds(&self, id: &Identity<P>) -> bool {
        let mut acc = vec![Fp::<P>::new(0); self.d];
        for (p, sign, act, c) in &id.terms {
            let f = *sign * *c;
            let val = &self.values[*p];
            match act {
                None => {
                    for (k, v) in val.iter().enumerate() {
                        acc[k] = acc[k] + f * *v;
                    }
                }
                Some(x) => {
                    for (k, v) in val.iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        for (o, a) in self.m.act_basis(*x, k).iter() {
                            acc[*o] = acc[*o] + f * *v * *a;
                        }
                    }
                }
            }
        }
        acc.iter().all(|v| v.is_zero())
    }

    fn run(&mut self, level: usize) {
        self.visited += 1;
        if level == self.npairs {
            let d = self.d;
            let coeffs = self
                .values
                .iter()
                .enumerate()
                .flat_map(|(p, v)| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (p * d + k, *c)))
                .collect::<Vec<_>>();
            self.members.push(SparseVec::from_pairs(coeffs));
            return;
        }
        let d = self.d;
        let mut options = Vec::new();
        for_each_vector::<P>(d, |v| {
            options.push(v.to_vec());
            true
        });
        for v in options {
            self.values[level] = v;
            if self.by_level[level].iter().all(|id| self.holds(id)) {
                self.run(level + 1);
            }
        }
        self.values[level] = vec![Fp::new(0); d];
    }
}

fn enumerate_biderivations<const P: u64>(
    m: &LModule<Fp<P>>,
    symmetry: Symmetry,
    budget: EnumerationBudget,
) -> Result<OracleResult<P>, OracleError> {
    let (n, d) = (m.lie().dim(), m.dim());
    let npairs = pair_count(n, symmetry);
    let unknowns = npairs * d;
    budget.check(P, unknowns)?;
    let l = m.lie();
    let one = Fp::<P>::new(1);
    let mut by_level: Vec<Vec<Identity<P>>> = (0..npairs.max(1)).map(|_| Vec::new()).collect();
    let mut push = |terms: Vec<(Option<(usize, Fp<P>)>, Option<usize>, Fp<P>)>| {
        let terms: Vec<_> = terms.into_iter().filter_map(|(slot, act, c)| slot.map(|(p, s)| (p, s, act, c))).collect();
        if let Some(level) = terms.iter().map(|t| t.0).max() {
            by_level[level].push(Identity { terms, level });
        }
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let slot = |a: usize, b: usize| pair_slot::<Fp<P>>(n, a, b, symmetry);
                // δ([x,y], z) = x·δ(y,z) − y·δ(x,z)
                let mut first: Vec<_> = l.bracket_basis(x, y).iter().map(|(s, c)| (slot(*s, z), None, *c)).collect();
                first.push((slot(y, z), Some(x), -one));
                first.push((slot(x, z), Some(y), one));
                push(first);
                // δ(z, [x,y]) = x·δ(z,y) − y·δ(z,x)
                let mut second: Vec<_> = l.bracket_basis(x, y).iter().map(|(s, c)| (slot(z, *s), None, *c)).collect();
                second.push((slot(z, y), Some(x), -one));
                second.push((slot(z, x), Some(y), one));
                push(second);
            }
        }
    }
    let mut search =
        Search { m, d, npairs, by_level, values: vec![vec![Fp::new(0); d]; npairs], members: Vec::new(), visited: 0 };
    search.run(0);
    debug_assert!(search.by_level.iter().enumerate().all(|(i, ids)| ids.iter().all(|id| id.level == i)));
    let (members, visited) = (search.members, search.visited);
    wrap(members, unknowns, unknowns, visited)
}

/// Skew-symmetric biderivations `L x L → M`, in the solver's coefficient
/// layout (pairs `i < j`).
pub fn enumerate_skew_biderivations<const P: u64>(
    m: &LModule<Fp<P>>,
    budget: EnumerationBudget,
) -> Result<OracleResult<P>, OracleError> {
    enumerate_biderivations(m, Symmetry::Skew, budget)
}

/// Symmetric biderivations, pairs `i <= j`.
pub fn enumerate_symmetric_biderivations<const P: u64>(
    m: &LModule<Fp<P>>,
    budget: EnumerationBudget,
) -> Result<OracleResult<P>, OracleError> {
    enumerate_biderivations(m, Symmetry::Symmetric, budget)
}

/// A vector `x` with `x · f(x) ≠ 0`, if any.
pub fn commuting_counterexample<const P: u64>(m: &LModule<Fp<P>>, f: &LinearMap<Fp<P>>) -> Option<SparseVec<Fp<P>>> {
    let n = m.lie().dim();
    let mut found = None;
    for_each_vector::<P>(n, |x| {
        let x = SparseVec::from_dense(x);
        if m.act(&x, &f.apply(&x)).is_zero() {
            true
        } else {
            found = Some(x);
            false
        }
    });
    found
}

/// Linear maps with `x · f(x) = 0` for every `x ∈ F_p^n`.
pub fn enumerate_commuting<const P: u64>(
    m: &LModule<Fp<P>>,
    budget: EnumerationBudget,
) -> Result<OracleResult<P>, OracleError> {
    let (n, d) = (m.lie().dim(), m.dim());
    let unknowns = n * d;
    budget.check(P, unknowns)?;
    let mut xs = Vec::new();
    for_each_vector::<P>(n, |x| {
        xs.push(SparseVec::from_dense(x));
        true
    });
    let mut members = Vec::new();
    let mut visited = 0;
    for_each_vector::<P>(unknowns, |c| {
        visited += 1;
        let coeffs = SparseVec::from_dense(c);
        let f = LinearMap::from_coeffs(&coeffs, n, d);
        if xs.iter().all(|x| m.act(x, &f.apply(x)).is_zero()) {
            members.push(coeffs);
        }
        true
    });
    wrap(members, unknowns, unknowns, visited)
}
