//! Lifting `γ_{0,b}∘[·,·]` from `W(0,-1)` to its central extension.
//!
//! A lift `h` must have `h(L_m, L_n) = (n − m) b I_{m+n} + C_{m,n}`,
//! `h(L, I) = 0` and `h(I_m, I_n) = D_{m,n}` with `C, D` central. The
//! unknowns are the three central coordinates of every `C_{m,n}` and
//! `D_{m,n}`; the equations are the first-slot derivation identity on every
//! triple of graded keys whose terms all stay in the window. `h` vanishes on
//! the center since the algebra is perfect.

use serde_json::{json, Value};

use super::{Family, Key, WindowError, WindowInstance};
use crate::field::{format_rational, Field, Rational};
use crate::linalg::{EchelonBuilder, SparseVec};

#[derive(Debug, Clone, PartialEq)]
pub struct LiftObstruction {
    pub b: Rational,
    pub n: usize,
    pub solvable: bool,
    pub ii_cocycle: bool,
    /// Nonzero central coordinates fixed by the system.
    pub forced: Vec<String>,
    /// First triple whose equations made the system inconsistent.
    pub inconsistent_at: Option<(String, String, String)>,
    pub unknowns: usize,
    pub equations: usize,
}

impl LiftObstruction {
    pub fn to_json(&self) -> Value {
        json!({
            "b": format_rational(&self.b),
            "window": self.n,
            "solvable": self.solvable,
            "ii_cocycle": self.ii_cocycle,
            "inconsistent_at": self.inconsistent_at.as_ref().map(|(x, y, z)| json!([x, y, z])),
            "forced": self.forced,
            "unknowns": self.unknowns,
            "equations": self.equations,
        })
    }
}

/// An affine expression per output coordinate: variables `0..nv`, the
/// constant in column `nv`.
type Affine<F> = std::collections::BTreeMap<usize, SparseVec<F>>;

fn add_into<F: Field>(acc: &mut Affine<F>, o: usize, v: &SparseVec<F>, c: &F) {
    let e = acc.entry(o).or_insert_with(SparseVec::zero);
    *e = e.add_scaled(v, c);
}

/// Builds and solves the lifting system for `γ_{0,b}` on the window of
/// radius `n`. With `ii_cocycle` the `[I_m, I_n]` cocycle is included (the
/// resulting bracket violates Jacobi; kept for comparison).
pub fn lift_obstruction_w0minus1<F: Field>(b: &Rational, n: usize) -> Result<LiftObstruction, WindowError> {
    lift_obstruction_with::<F>(b, n, false)
}

pub fn lift_obstruction_with<F: Field>(b: &Rational, n: usize, ii_cocycle: bool) -> Result<LiftObstruction, WindowError> {
    if n < 4 {
        return Err(WindowError::WindowTooSmall { n, min: 4 });
    }
    let w = WindowInstance::<F>::instantiate(Family::WTilde0m1 { ii_cocycle }, n)?;
    let l = &w.algebra;
    let cs: Vec<usize> = (0..3).map(|k| w.index_of(&Key::new(10 + k, 0)).unwrap()).collect();
    let graded: Vec<usize> = (0..w.dim()).filter(|i| !cs.contains(i)).collect();
    let bf = super::convert::<F>(b)?;

    // central unknowns C (on L x L) and D (on I x I), three coordinates each
    let mut var = std::collections::HashMap::new();
    for &x in &graded {
        for &y in &graded {
            if x < y && w.keys[x].tag == w.keys[y].tag {
                for k in 0..3 {
                    let next = var.len();
                    var.insert((x, y, k), next);
                }
            }
        }
    }
    let nv = var.len();

    // h(x, y) as an affine expression per coordinate; None when it leaves
    // the window
    let h = |x: usize, y: usize| -> Option<Affine<F>> {
        let mut out = Affine::new();
        if cs.contains(&x) || cs.contains(&y) || x == y || w.keys[x].tag != w.keys[y].tag {
            return Some(out);
        }
        let (lo, hi, sign) = if x < y { (x, y, F::one()) } else { (y, x, -F::one()) };
        if w.keys[lo].tag == 0 {
            let (m, p) = (w.keys[lo].deg.0, w.keys[hi].deg.0);
            let t = w.index_of(&Key::new(1, m + p))?;
            out.insert(t, SparseVec::single(nv, F::from_i64(p - m).mul_ref(&bf).mul_ref(&sign)));
        }
        for (k, &ck) in cs.iter().enumerate() {
            out.insert(ck, SparseVec::single(var[&(lo, hi, k)], sign.clone()));
        }
        Some(out)
    };
    // brackets an affine expression with a basis element; `left` puts the
    // expression on the left
    let bracket = |e: &Affine<F>, g: usize, left: bool, acc: &mut Affine<F>| -> bool {
        for (&t, v) in e {
            let (i, j) = if left { (t, g) } else { (g, t) };
            if l.is_partial(i, j) {
                return false;
            }
            for (o, c) in l.bracket_basis(i, j).iter() {
                add_into(acc, *o, v, c);
            }
        }
        true
    };

    let mut eb = EchelonBuilder::new(nv + 1);
    let mut inconsistent_at = None;
    let mut equations = 0;
    for &x in &graded {
        for &y in &graded {
            if l.is_partial(x, y) {
                continue;
            }
            for &z in &graded {
                // h([x, y], z) − [h(x, z), y] − [x, h(y, z)]
                let mut diff = Affine::new();
                let mut ok = true;
                for (s, c) in l.bracket_basis(x, y).iter() {
                    match h(*s, z) {
                        Some(e) => {
                            for (o, v) in e {
                                add_into(&mut diff, o, &v, c);
                            }
                        }
                        None => ok = false,
                    }
                }
                let mut rhs = Affine::new();
                match (h(x, z), h(y, z)) {
                    (Some(a), Some(bb)) => {
                        ok &= bracket(&a, y, true, &mut rhs);
                        ok &= bracket(&bb, x, false, &mut rhs);
                    }
                    _ => ok = false,
                }
                if !ok {
                    continue;
                }
                for (o, v) in rhs {
                    add_into(&mut diff, o, &v, &-F::one());
                }
                equations += 1;
                for (_, row) in diff {
                    // Σ a_v x_v + c = 0 becomes Σ a_v x_v = −c
                    let row = SparseVec::from_pairs(row.iter().map(|(k, c)| (*k, if *k == nv { -c.clone() } else { c.clone() })));
                    if !row.is_zero() {
                        eb.push(&row);
                    }
                }
                if inconsistent_at.is_none() && eb.has_pivot(nv) {
                    inconsistent_at = Some((w.key_name(x), w.key_name(y), w.key_name(z)));
                }
            }
        }
    }
    let solvable = inconsistent_at.is_none();
    let mut forced = Vec::new();
    if solvable {
        let names: std::collections::HashMap<usize, (usize, usize, usize)> = var.iter().map(|(k, v)| (*v, *k)).collect();
        for row in eb.finish() {
            let vars: Vec<_> = row.iter().filter(|(k, _)| *k < nv).collect();
            let value = row.get(nv);
            if vars.len() == 1 && !value.is_zero() {
                let (x, y, k) = names[&vars[0].0];
                forced.push(format!("h({}, {}).c{} = {}", w.key_name(x), w.key_name(y), k + 1, value));
            }
        }
        forced.sort();
    }
    Ok(LiftObstruction { b: b.clone(), n, ii_cocycle, solvable, forced, inconsistent_at, unknowns: nv, equations })
}
