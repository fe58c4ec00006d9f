//! Z-graded families given by closed-form coefficients, truncated to an
//! index window `[-N, N]`.
//!
//! A bracket whose result would leave the window is kept as a partial pair
//! (stored value zero). The solvers in [`solve`] only use identities whose
//! every term stays inside the window, so the spaces they return are exact
//! statements about the inner window `[-N', N']`, not global dimensions.

pub mod module;
pub mod obstruction;
pub mod solve;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::field::{format_rational, rational, Field, Rational};
use crate::lie::{LModule, LieAlgebra, LieError};
use crate::linalg::SparseVec;

pub use module::*;
pub use obstruction::*;
pub use solve::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WindowError {
    WindowTooSmall { n: usize, min: usize },
    /// A coefficient has no image in the chosen field.
    FieldConversion { coefficient: String },
    UnknownFamily(String),
    MissingParameter(&'static str),
    NotCentral { key: String },
    Lie(LieError),
}

impl fmt::Display for WindowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowError::WindowTooSmall { n, min } => write!(f, "window radius {n} is below the minimum {min}"),
            WindowError::FieldConversion { coefficient } => {
                write!(f, "coefficient {coefficient} is not defined over the chosen field")
            }
            WindowError::UnknownFamily(s) => write!(f, "unknown family {s:?}"),
            WindowError::MissingParameter(p) => write!(f, "missing parameter {p}"),
            WindowError::NotCentral { key } => write!(f, "{key} is not central in the window"),
            WindowError::Lie(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for WindowError {}

impl From<LieError> for WindowError {
    fn from(e: LieError) -> Self {
        WindowError::Lie(e)
    }
}

/// Basis label: a tag and a (possibly two-component) degree. Central
/// elements carry degree zero and are never truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub tag: u8,
    pub deg: (i64, i64),
}

impl Key {
    pub const fn new(tag: u8, m: i64) -> Self {
        Key { tag, deg: (m, 0) }
    }

    pub const fn two(tag: u8, m: i64, i: i64) -> Self {
        Key { tag, deg: (m, i) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `[L_m,L_n]=(n-m)L_{m+n}`, `[L_m,I_n]=(n+a+bm)I_{m+n}`, `[I_m,I_n]=0`.
    Wab { a: Rational, b: Rational },
    W00,
    /// `W(0,-1)` extended by `c1, c2, c3`. The `[I_m, I_n]` cocycle is only
    /// added when `ii_cocycle` is set; with it the Jacobi identity fails.
    WTilde0m1 { ii_cocycle: bool },
    SchrodingerVirasoro,
    /// `[L_{m,i}, L_{n,j}] = (n(i+q) - m(j+q)) L_{m+n,i+j}`.
    Block { q: Rational },
}

const L: u8 = 0;
const I: u8 = 1;
const Y: u8 = 1;
const M: u8 = 2;
const C1: u8 = 10;

fn virasoro_cocycle(m: i64) -> Rational {
    rational(m * m * m - m, 12)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Wab { .. } => "wab",
            Family::W00 => "w00",
            Family::WTilde0m1 { .. } => "wtilde0m1",
            Family::SchrodingerVirasoro => "sv",
            Family::Block { .. } => "block",
        }
    }

    pub fn params_json(&self) -> Value {
        match self {
            Family::Wab { a, b } => json!({"a": format_rational(a), "b": format_rational(b)}),
            Family::WTilde0m1 { ii_cocycle } => json!({"ii_cocycle": ii_cocycle}),
            Family::Block { q } => json!({"q": format_rational(q)}),
            _ => json!({}),
        }
    }

    /// Whether `(a, b)` avoids `Z x {0, -1}`, where the scalar-centroid
    /// argument applies. Other families report `true`.
    pub fn generic_params(&self) -> bool {
        match self {
            Family::Wab { a, b } => !(a.is_integer() && (b.is_zero() || *b == q(-1))),
            Family::W00 => false,
            _ => true,
        }
    }

    fn two_dimensional(&self) -> bool {
        matches!(self, Family::Block { .. })
    }

    fn tags(&self) -> &'static [u8] {
        match self {
            Family::Wab { .. } | Family::W00 | Family::WTilde0m1 { .. } => &[L, I],
            Family::SchrodingerVirasoro => &[L, Y, M],
            Family::Block { .. } => &[L],
        }
    }

    fn central_keys(&self) -> Vec<Key> {
        match self {
            Family::WTilde0m1 { .. } => (0..3).map(|k| Key::new(C1 + k, 0)).collect(),
            _ => Vec::new(),
        }
    }

    /// Known central elements of the infinite algebra.
    pub fn known_center(&self) -> Vec<Key> {
        match self {
            Family::W00 => vec![Key::new(I, 0)],
            Family::WTilde0m1 { .. } => self.central_keys(),
            Family::SchrodingerVirasoro => vec![Key::new(M, 0)],
            _ => Vec::new(),
        }
    }

    pub fn key_name(&self, k: &Key) -> String {
        if k.tag >= C1 {
            return format!("c{}", k.tag - C1 + 1);
        }
        let t = match (self, k.tag) {
            (Family::SchrodingerVirasoro, Y) => "Y",
            (Family::SchrodingerVirasoro, M) => "M",
            (_, L) => "L",
            _ => "I",
        };
        if self.two_dimensional() {
            format!("{t}_{{{},{}}}", k.deg.0, k.deg.1)
        } else {
            format!("{t}_{}", k.deg.0)
        }
    }

    /// `[x, y]` as a list of (key, coefficient), before truncation.
    pub fn rule(&self, x: &Key, y: &Key) -> Vec<(Key, Rational)> {
        if x.tag >= C1 || y.tag >= C1 {
            return Vec::new();
        }
        let (m, n) = (x.deg.0, y.deg.0);
        let mut out = Vec::new();
        match self {
            Family::Wab { a, b } => wab_rule(a, b, x, y, &mut out),
            Family::W00 => wab_rule(&q(0), &q(0), x, y, &mut out),
            Family::WTilde0m1 { ii_cocycle } => {
                wab_rule(&q(0), &q(-1), x, y, &mut out);
                if m + n == 0 {
                    let c = match (x.tag, y.tag) {
                        (L, L) => Some(C1),
                        (L, _) | (_, L) => Some(C1 + 1),
                        _ if *ii_cocycle => Some(C1 + 2),
                        _ => None,
                    };
                    if let Some(c) = c {
                        // the cocycle is odd in m, so either orientation reads φ(m)
                        out.push((Key::new(c, 0), virasoro_cocycle(m)));
                    }
                }
            }
            Family::SchrodingerVirasoro => match (x.tag, y.tag) {
                (L, L) => out.push((Key::new(L, m + n), q(n - m))),
                (L, Y) => out.push((Key::new(Y, m + n), q(n) - rational(m, 2))),
                (Y, L) => out.push((Key::new(Y, m + n), rational(n, 2) - q(m))),
                (L, M) => out.push((Key::new(M, m + n), q(n))),
                (M, L) => out.push((Key::new(M, m + n), q(-m))),
                (Y, Y) => out.push((Key::new(M, m + n), q(n - m))),
                _ => {}
            },
            Family::Block { q: qq } => {
                let (i, j) = (x.deg.1, y.deg.1);
                let c = q(n) * (q(i) + qq) - q(m) * (q(j) + qq);
                out.push((Key::two(L, m + n, i + j), c));
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }

    /// Every key of radius at most `n`, in a fixed order: by tag, then by
    /// degree; central keys last.
    pub fn keys(&self, n: i64) -> Vec<Key> {
        let mut keys = Vec::new();
        for &t in self.tags() {
            if self.two_dimensional() {
                for m in -n..=n {
                    for i in -n..=n {
                        keys.push(Key::two(t, m, i));
                    }
                }
            } else {
                keys.extend((-n..=n).map(|m| Key::new(t, m)));
            }
        }
        keys.extend(self.central_keys());
        keys
    }

    pub fn parse(name: &str, a: Option<Rational>, b: Option<Rational>, qv: Option<Rational>) -> Result<Self, WindowError> {
        Ok(match name {
            "wab" => Family::Wab {
                a: a.ok_or(WindowError::MissingParameter("a"))?,
                b: b.ok_or(WindowError::MissingParameter("b"))?,
            },
            "w00" => Family::W00,
            "wtilde0m1" => Family::WTilde0m1 { ii_cocycle: false },
            "sv" => Family::SchrodingerVirasoro,
            "block" => Family::Block { q: qv.ok_or(WindowError::MissingParameter("q"))? },
            other => return Err(WindowError::UnknownFamily(other.to_string())),
        })
    }
}

fn wab_rule(a: &Rational, b: &Rational, x: &Key, y: &Key, out: &mut Vec<(Key, Rational)>) {
    let (m, n) = (x.deg.0, y.deg.0);
    match (x.tag, y.tag) {
        (L, L) => out.push((Key::new(L, m + n), q(n - m))),
        (L, I) => out.push((Key::new(I, m + n), q(n) + a + b * q(m))),
        (I, L) => out.push((Key::new(I, m + n), -(q(m) + a + b * q(n)))),
        _ => {}
    }
}

pub(crate) fn convert<F: Field>(c: &Rational) -> Result<F, WindowError> {
    F::from_rational(c).ok_or_else(|| WindowError::FieldConversion { coefficient: format_rational(c) })
}

/// A family truncated to radius `N`, with the inner radius used by the
/// solvers.
#[derive(Debug, Clone)]
pub struct WindowInstance<F> {
    pub family: Family,
    pub n: usize,
    pub inner: usize,
    pub keys: Vec<Key>,
    /// Keys removed by [`WindowInstance::quotient_by_keys`].
    pub removed: Vec<Key>,
    pub algebra: Arc<LieAlgebra<F>>,
    index: HashMap<Key, usize>,
}

fn radius(k: &Key) -> i64 {
    k.deg.0.abs().max(k.deg.1.abs())
}

impl<F: Field> WindowInstance<F> {
    pub fn instantiate(family: Family, n: usize) -> Result<Self, WindowError> {
        if n < 3 {
            return Err(WindowError::WindowTooSmall { n, min: 3 });
        }
        Self::build(family, n, n / 3, Vec::new())
    }

    /// Same, with an explicit inner radius (at most `N/2`).
    pub fn with_inner(mut self, inner: usize) -> Self {
        self.inner = inner.min(self.n / 2);
        self
    }

    fn build(family: Family, n: usize, inner: usize, removed: Vec<Key>) -> Result<Self, WindowError> {
        let keys: Vec<Key> = family.keys(n as i64).into_iter().filter(|k| !removed.contains(k)).collect();
        let index: HashMap<Key, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut brackets = Vec::new();
        let mut partial = Vec::new();
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                let mut v = Vec::new();
                let mut out_of_window = false;
                for (k, c) in family.rule(&keys[i], &keys[j]) {
                    if removed.contains(&k) {
                        continue;
                    }
                    match index.get(&k) {
                        Some(&t) => v.push((t, convert::<F>(&c)?)),
                        None => out_of_window = true,
                    }
                }
                if out_of_window {
                    partial.push((i, j));
                } else if !v.is_empty() {
                    brackets.push((i, j, SparseVec::from_pairs(v)));
                }
            }
        }
        let names = keys.iter().map(|k| family.key_name(k)).collect();
        let algebra = Arc::new(LieAlgebra::new(names, brackets)?.with_partial(partial));
        Ok(WindowInstance { family, n, inner, keys, removed, algebra, index })
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    pub fn index_of(&self, k: &Key) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn key_name(&self, i: usize) -> String {
        self.family.key_name(&self.keys[i])
    }

    pub fn degree(&self, i: usize) -> (i64, i64) {
        self.keys[i].deg
    }

    /// Indices of keys within the inner radius (central keys included).
    pub fn inner_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| radius(&self.keys[i]) <= self.inner as i64).collect()
    }

    /// Indices of keys within radius `r`.
    pub fn indices_within(&self, r: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| radius(&self.keys[i]) <= r as i64).collect()
    }

    /// Indices whose degree equals `d`.
    pub fn indices_of_degree(&self, d: (i64, i64)) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.keys[i].deg == d).collect()
    }

    pub fn adjoint(&self) -> LModule<F> {
        LModule::adjoint(self.algebra.clone())
    }

    /// Quotient by the span of the given keys, which must bracket to zero
    /// with every key of the window.
    pub fn quotient_by_keys(&self, central: &[Key]) -> Result<Self, WindowError> {
        for k in central {
            let i = self.index_of(k).ok_or_else(|| WindowError::NotCentral { key: self.family.key_name(k) })?;
            let central_here = (0..self.dim()).all(|j| !self.algebra.is_partial(i, j) && self.algebra.bracket_basis(i, j).is_zero());
            if !central_here {
                return Err(WindowError::NotCentral { key: self.key_name(i) });
            }
        }
        let mut removed = self.removed.clone();
        removed.extend_from_slice(central);
        Self::build(self.family.clone(), self.n, self.inner, removed)
    }

    /// Quotient by the family's known center.
    pub fn central_quotient(&self) -> Result<Self, WindowError> {
        self.quotient_by_keys(&self.family.known_center())
    }

    pub fn summary(&self) -> Value {
        json!({
            "family": self.family.name(),
            "params": self.family.params_json(),
            "generic_params": self.family.generic_params(),
            "window": self.n,
            "inner": self.inner,
            "dim": self.dim(),
            "partial_pairs": self.algebra.partial_pairs().len(),
            "removed": self.removed.iter().map(|k| self.family.key_name(k)).collect::<Vec<_>>(),
            "jacobi_violations": self.algebra.check_jacobi().len(),
        })
    }
}

/// The truncated bracket as a map restricted to a domain: zero outside
/// `domain x domain`.
pub fn bracket_on_domain<F: Field>(w: &WindowInstance<F>, domain: &[usize]) -> crate::maps::BilinearMap<F> {
    let n = w.dim();
    let inside: Vec<bool> = (0..n).map(|i| domain.contains(&i)).collect();
    crate::maps::BilinearMap::from_fn(n, n, crate::maps::Symmetry::Skew, |i, j| {
        if inside[i] && inside[j] && !w.algebra.is_partial(i, j) {
            w.algebra.bracket_basis(i, j).clone()
        } else {
            SparseVec::zero()
        }
    })
}

/// Parses `"1/2"`, `"-3"` or `"7/3"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            if b == 0 {
                return None;
            }
            rational(a, b)
        }
        None => q(s.parse().ok()?),
    };
    Some(r)
}

pub(crate) fn is_integer_in_window(a: &Rational, n: usize) -> Option<i64> {
    (a.is_integer() && a.abs() <= q(n as i64)).then(|| a.to_integer().try_into().ok()).flatten()
}

/// `γ_{a,b}`: `L_m ↦ a L_m + b I_m`, `I_m ↦ a I_m`, on a window with `L, I`
/// keys. On the central extension it also sends `c1 ↦ b c2` and fixes the
/// center up to `a`, which makes `γ_{0,b}` a centroid element there.
pub fn gamma_ab<F: Field>(w: &WindowInstance<F>, a: &Rational, b: &Rational) -> Result<crate::maps::LinearMap<F>, WindowError> {
    let (af, bf) = (convert::<F>(a)?, convert::<F>(b)?);
    let c2 = w.index_of(&Key::new(C1 + 1, 0));
    let images = w
        .keys
        .iter()
        .map(|k| {
            let mut v = vec![(w.index_of(k).unwrap(), af.clone())];
            match k.tag {
                L => v.extend(w.index_of(&Key::new(I, k.deg.0)).map(|t| (t, bf.clone()))),
                C1 => v.extend(c2.map(|t| (t, bf.clone()))),
                _ => {}
            }
            SparseVec::from_pairs(v)
        })
        .collect();
    Ok(crate::maps::LinearMap::from_images(w.dim(), images))
}
