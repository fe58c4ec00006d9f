//! Free Lie algebra on `x1, …, xk` with a Hall basis, computed inside the
//! free associative algebra (a Lie element is a noncommutative polynomial).
//!
//! Everything is multigraded, so each computation happens inside one
//! multidegree component, whose words are few at the degrees used here.
//!
//! Hall order: higher total degree first, then lexicographic on the printed
//! form. `(u, v)` is a Hall tree when `u < v` and either `u` is a generator or
//! `u = (a, b)` with `b ≥ v`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};

use crate::field::Field;
use crate::lie::LieAlgebra;
use crate::linalg::{SparseVec, Subspace};
use crate::maps::solve_combination;

pub type Multidegree = Vec<usize>;
type Word = Vec<u8>;
type Poly<F> = BTreeMap<Word, F>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeLieError {
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("element is not in the span of the Hall basis")]
    NotLie,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallElement {
    /// `None` for generators.
    pub children: Option<(usize, usize)>,
    pub generator: Option<usize>,
    pub multidegree: Multidegree,
    pub degree: usize,
    pub name: String,
}

/// Combination of Hall basis elements, indexed by position in the Hall list.
pub type FreeLieElement<F> = SparseVec<F>;

/// The Hall basis up to a total degree, with word expansions.
#[derive(Debug, Clone)]
pub struct FreeLie<F> {
    gens: usize,
    max_degree: usize,
    hall: Vec<HallElement>,
    components: BTreeMap<Multidegree, Vec<usize>>,
    expansions: Vec<Poly<F>>,
    words: HashMap<Multidegree, Component>,
}

#[derive(Debug, Clone)]
struct Component {
    index: HashMap<Word, usize>,
    len: usize,
}

fn cmp_hall(a: &HallElement, b: &HallElement) -> Ordering {
    b.degree.cmp(&a.degree).then_with(|| a.name.cmp(&b.name))
}

fn add_md(a: &[usize], b: &[usize]) -> Multidegree {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn le_md(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn sub_md(a: &[usize], b: &[usize]) -> Multidegree {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn unit_md(gens: usize, i: usize) -> Multidegree {
    let mut m = vec![0; gens];
    m[i] = 1;
    m
}

fn poly_add<F: Field>(acc: &mut Poly<F>, p: &Poly<F>, c: &F) {
    for (w, a) in p {
        let e = acc.entry(w.clone()).or_insert_with(F::zero);
        *e = e.clone() + a.mul_ref(c);
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

fn commutator<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let mut out: Poly<F> = BTreeMap::new();
    for (u, x) in a {
        for (v, y) in b {
            let c = x.mul_ref(y);
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            let mut vu = v.clone();
            vu.extend_from_slice(u);
            poly_add(&mut out, &BTreeMap::from([(uv, F::one())]), &c);
            poly_add(&mut out, &BTreeMap::from([(vu, F::one())]), &-c);
        }
    }
    out
}

fn words_of(md: &[usize]) -> Vec<Word> {
    fn rec(left: &mut Vec<usize>, cur: &mut Word, out: &mut Vec<Word>) {
        if left.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for g in 0..left.len() {
            if left[g] > 0 {
                left[g] -= 1;
                cur.push(g as u8);
                rec(left, cur, out);
                cur.pop();
                left[g] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut md.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// All multidegrees in `gens` variables with total degree `d`.
pub fn multidegrees(gens: usize, d: usize) -> Vec<Multidegree> {
    fn rec(gens: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Multidegree>) {
        if cur.len() + 1 == gens {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(gens, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if gens > 0 {
        rec(gens, d, &mut Vec::new(), &mut out);
    }
    out
}

impl<F: Field> FreeLie<F> {
    pub fn new(gens: usize, max_degree: usize) -> Self {
        assert!(gens >= 1 && max_degree >= 1);
        let mut hall: Vec<HallElement> = (0..gens)
            .map(|g| HallElement {
                children: None,
                generator: Some(g),
                multidegree: unit_md(gens, g),
                degree: 1,
                name: format!("x{}", g + 1),
            })
            .collect();
        for d in 2..=max_degree {
            let mut new = Vec::new();
            for u in 0..hall.len() {
                for v in 0..hall.len() {
                    let (hu, hv) = (&hall[u], &hall[v]);
                    if hu.degree + hv.degree != d || cmp_hall(hu, hv) != Ordering::Less {
                        continue;
                    }
                    let ok = match hu.children {
                        None => true,
                        Some((_, b)) => cmp_hall(&hall[b], hv) != Ordering::Less,
                    };
                    if ok {
                        new.push(HallElement {
                            children: Some((u, v)),
                            generator: None,
                            multidegree: add_md(&hu.multidegree, &hv.multidegree),
                            degree: d,
                            name: format!("[{},{}]", hu.name, hv.name),
                        });
                    }
                }
            }
            new.sort_by(|a, b| a.name.cmp(&b.name));
            hall.extend(new);
        }
        let mut expansions: Vec<Poly<F>> = Vec::with_capacity(hall.len());
        for h in &hall {
            let p = match (h.generator, h.children) {
                (Some(g), _) => BTreeMap::from([(vec![g as u8], F::one())]),
                (None, Some((a, b))) => commutator(&expansions[a], &expansions[b]),
                _ => unreachable!(),
            };
            expansions.push(p);
        }
        let mut components: BTreeMap<Multidegree, Vec<usize>> = BTreeMap::new();
        for (i, h) in hall.iter().enumerate() {
            components.entry(h.multidegree.clone()).or_default().push(i);
        }
        FreeLie { gens, max_degree, hall, components, expansions, words: HashMap::new() }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn hall(&self) -> &[HallElement] {
        &self.hall
    }

    /// Hall indices of one multidegree component.
    pub fn component(&self, md: &[usize]) -> &[usize] {
        self.components.get(md).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count_by_degree(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree + 1];
        for h in &self.hall {
            out[h.degree] += 1;
        }
        out
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.hall.iter().position(|h| h.name == name)
    }

    pub fn generator(&self, g: usize) -> FreeLieElement<F> {
        SparseVec::unit(g)
    }

    fn comp(&mut self, md: &[usize]) -> &Component {
        self.words.entry(md.to_vec()).or_insert_with(|| {
            let ws = words_of(md);
            Component { len: ws.len(), index: ws.into_iter().enumerate().map(|(i, w)| (w, i)).collect() }
        })
    }

    /// Word coordinates of a homogeneous polynomial of multidegree `md`.
    fn to_word_vec(&mut self, md: &[usize], p: &Poly<F>) -> SparseVec<F> {
        let c = self.comp(md);
        SparseVec::from_pairs(p.iter().map(|(w, a)| (c.index[w], a.clone())))
    }

    /// Word coordinates of the Hall elements of one component.
    fn hall_word_vecs(&mut self, md: &[usize]) -> Vec<SparseVec<F>> {
        let idx = self.component(md).to_vec();
        let exps: Vec<Poly<F>> = idx.iter().map(|&i| self.expansions[i].clone()).collect();
        exps.iter().map(|e| self.to_word_vec(md, e)).collect()
    }

    pub fn word_len(&mut self, md: &[usize]) -> usize {
        self.comp(md).len
    }

    /// The noncommutative polynomial of an element.
    fn expand(&self, x: &FreeLieElement<F>) -> Poly<F> {
        let mut out = BTreeMap::new();
        for (i, c) in x.iter() {
            poly_add(&mut out, &self.expansions[*i], c);
        }
        out
    }

    fn multidegree_of(&self, w: &Word) -> Multidegree {
        let mut md = vec![0; self.gens];
        for &g in w {
            md[g as usize] += 1;
        }
        md
    }

    /// Expresses a Lie polynomial in the Hall basis.
    fn to_hall(&mut self, p: &Poly<F>) -> Result<FreeLieElement<F>, FreeLieError> {
        let mut parts: BTreeMap<Multidegree, Poly<F>> = BTreeMap::new();
        for (w, c) in p {
            if w.len() > self.max_degree {
                return Err(FreeLieError::DegreeOverflow { degree: w.len(), bound: self.max_degree });
            }
            parts.entry(self.multidegree_of(w)).or_default().insert(w.clone(), c.clone());
        }
        let mut out = Vec::new();
        for (md, part) in parts {
            let idx = self.component(&md).to_vec();
            let cols = self.hall_word_vecs(&md);
            let target = self.to_word_vec(&md, &part);
            let x = solve_combination(&cols, &target).ok_or(FreeLieError::NotLie)?;
            out.extend(idx.into_iter().zip(x).filter(|(_, c)| !c.is_zero()));
        }
        Ok(SparseVec::from_pairs(out))
    }

    /// `[a, b]` in the Hall basis.
    pub fn bracket(&mut self, a: &FreeLieElement<F>, b: &FreeLieElement<F>) -> Result<FreeLieElement<F>, FreeLieError> {
        let p = commutator(&self.expand(a), &self.expand(b));
        self.to_hall(&p)
    }

    /// Left-normed bracket `[[…[g0, g1], …], gk]` of generators.
    pub fn left_normed(&mut self, gens: &[usize]) -> Result<FreeLieElement<F>, FreeLieError> {
        let mut x = self.generator(gens[0]);
        for &g in &gens[1..] {
            x = self.bracket(&x, &self.generator(g))?;
        }
        Ok(x)
    }

    /// Rank of the left-normed brackets over all orderings of the multiset,
    /// computed on words without reference to the Hall basis.
    pub fn left_normed_rank(&mut self, md: &[usize]) -> usize {
        let mut rows = Vec::new();
        for w in words_of(md) {
            let mut p: Poly<F> = BTreeMap::from([(vec![w[0]], F::one())]);
            for &g in &w[1..] {
                p = commutator(&p, &BTreeMap::from([(vec![g], F::one())]));
            }
            rows.push(self.to_word_vec(md, &p));
        }
        let len = self.word_len(md);
        Subspace::from_sparse(len, rows.iter()).unwrap().dim()
    }

    /// Rank of the word expansions of a Hall component.
    pub fn component_rank(&mut self, md: &[usize]) -> usize {
        let rows = self.hall_word_vecs(md);
        let len = self.word_len(md);
        Subspace::from_sparse(len, rows.iter()).unwrap().dim()
    }

    pub fn to_string(&self, x: &FreeLieElement<F>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| {
                let c = match c.to_json() {
                    Value::String(s) => s,
                    v => v.to_string(),
                };
                format!("{c}·{}", self.hall[*i].name)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The two ideals: `I` generated by `[[x1,f1],f2] + [[x1,f2],f1]` and `J`
/// generated by `[[x1,g1],g2]` with `g1, g2 ∈ F'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealKind {
    I,
    J,
}

/// Multigraded components of the ideals, in word coordinates.
pub struct IdealComponents<F> {
    pub free: FreeLie<F>,
    cache: HashMap<(IdealKind, Multidegree), Subspace<F>>,
}

impl<F: Field> IdealComponents<F> {
    pub fn new(free: FreeLie<F>) -> Self {
        IdealComponents { free, cache: HashMap::new() }
    }

    fn generators(&mut self, kind: IdealKind, md: &[usize]) -> Vec<SparseVec<F>> {
        let n = self.free.gens;
        if md[0] == 0 {
            return Vec::new();
        }
        let rest = sub_md(md, &unit_md(n, 0));
        let x1 = self.free.expansions[0].clone();
        let hall = self.free.hall.clone();
        let mut out = Vec::new();
        for (a, ha) in hall.iter().enumerate() {
            if !le_md(&ha.multidegree, &rest) {
                continue;
            }
            let other = sub_md(&rest, &ha.multidegree);
            for &b in self.free.component(&other).to_vec().iter() {
                let (ea, eb) = (&self.free.expansions[a], &self.free.expansions[b]);
                let p = match kind {
                    IdealKind::I => {
                        if b < a {
                            continue;
                        }
                        let mut p = commutator(&commutator(&x1, ea), eb);
                        poly_add(&mut p, &commutator(&commutator(&x1, eb), ea), &F::one());
                        p
                    }
                    IdealKind::J => {
                        if ha.degree < 2 || hall[b].degree < 2 {
                            continue;
                        }
                        commutator(&commutator(&x1, ea), eb)
                    }
                };
                if !p.is_empty() {
                    out.push(self.free.to_word_vec(md, &p));
                }
            }
        }
        out
    }

    /// The component of the ideal in multidegree `md`, as a subspace of the
    /// word space. Spanned by generator instances of that degree and by
    /// `[v, x_i]` for `v` in lower components; this is exact, since the ideal
    /// generated by a set is its closure under `ad x_i`.
    pub fn component_words(&mut self, kind: IdealKind, md: &[usize]) -> Subspace<F> {
        if let Some(s) = self.cache.get(&(kind, md.to_vec())) {
            return s.clone();
        }
        let n = self.free.gens;
        let mut rows = self.generators(kind, md);
        for i in 0..n {
            if md[i] == 0 || md.iter().sum::<usize>() < 2 {
                continue;
            }
            let lower = sub_md(md, &unit_md(n, i));
            let sub = self.component_words(kind, &lower);
            let lower_words = words_of(&lower);
            let xi = BTreeMap::from([(vec![i as u8], F::one())]);
            for v in sub.basis() {
                let p: Poly<F> = v.iter().map(|(k, c)| (lower_words[*k].clone(), c.clone())).collect();
                rows.push(self.free.to_word_vec(md, &commutator(&p, &xi)));
            }
        }
        let len = self.free.word_len(md);
        let s = Subspace::from_sparse(len, rows.iter()).unwrap();
        self.cache.insert((kind, md.to_vec()), s.clone());
        s
    }

    /// The component in Hall coordinates of that multidegree.
    pub fn component_hall(&mut self, kind: IdealKind, md: &[usize]) -> Subspace<F> {
        let words = self.component_words(kind, md);
        self.words_to_hall(md, &words)
    }

    /// `(I + J)` in multidegree `md`, word coordinates.
    pub fn sum_words(&mut self, md: &[usize]) -> Subspace<F> {
        let i = self.component_words(IdealKind::I, md);
        let j = self.component_words(IdealKind::J, md);
        i.sum(&j).unwrap()
    }

    fn words_to_hall(&mut self, md: &[usize], s: &Subspace<F>) -> Subspace<F> {
        let idx = self.free.component(md).to_vec();
        let cols = self.free.hall_word_vecs(md);
        let rows: Vec<SparseVec<F>> = s
            .basis()
            .iter()
            .map(|v| SparseVec::from_dense(&solve_combination(&cols, v).expect("ideal lies in the free Lie algebra")))
            .collect();
        Subspace::from_sparse(idx.len(), rows.iter()).unwrap()
    }

    /// Whether a homogeneous element lies in `I + J`.
    pub fn in_sum(&mut self, x: &FreeLieElement<F>) -> bool {
        let p = self.free.expand(x);
        let mut parts: BTreeMap<Multidegree, Poly<F>> = BTreeMap::new();
        for (w, c) in p {
            let md = self.free.multidegree_of(&w);
            parts.entry(md).or_default().insert(w, c);
        }
        parts.into_iter().all(|(md, part)| {
            let v = self.free.to_word_vec(&md, &part);
            self.sum_words(&md).contains_sparse(&v)
        })
    }
}

/// Outcome of the non-membership check for `[[[[x1,x2],x3],x3],x3]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JkReport {
    pub target: String,
    pub target_in_i: bool,
    pub target_in_sum: bool,
    pub i_dim: usize,
    pub j_dim: usize,
    pub component_dim: usize,
    /// The three listed elements of `I` are members.
    pub listed_in_i: bool,
    /// The listed elements span the whole `I` component.
    pub listed_span_i: bool,
    /// The four left-normed monomials are linearly independent.
    pub monomials_independent: bool,
    /// A basis of `I` in that degree, as Hall combinations.
    pub i_basis: Vec<String>,
}

impl JkReport {
    /// `[[[[x1,x2],x3],x3],x3] ∉ I + J`.
    pub fn holds(&self) -> bool {
        !self.target_in_sum
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": self.target,
            "holds": self.holds(),
            "target_in_I": self.target_in_i,
            "target_in_I_plus_J": self.target_in_sum,
            "I_dim": self.i_dim,
            "J_dim": self.j_dim,
            "component_dim": self.component_dim,
            "listed_in_I": self.listed_in_i,
            "listed_span_I": self.listed_span_i,
            "monomials_independent": self.monomials_independent,
            "I_basis": self.i_basis,
        })
    }
}

pub fn jk_report<F: Field>() -> JkReport {
    let mut free = FreeLie::<F>::new(3, 5);
    let md = vec![1, 1, 3];
    // generators are 0-based: x1 = 0, x2 = 1, x3 = 2
    let target = free.left_normed(&[0, 1, 2, 2, 2]).unwrap();
    let m1 = target.clone();
    let m2 = free.left_normed(&[0, 2, 1, 2, 2]).unwrap();
    let m3 = free.left_normed(&[0, 2, 2, 1, 2]).unwrap();
    let m4 = free.left_normed(&[0, 2, 2, 2, 1]).unwrap();
    let comp_len = free.component(&md).len();
    let mono = Subspace::from_sparse(comp_len, remap_all(&free, &md, &[&m1, &m2, &m3, &m4]).iter()).unwrap();
    let listed = [m1.add(&m2), m3.sub(&m4), m3.clone()];
    let listed_local = remap_all(&free, &md, &listed.iter().collect::<Vec<_>>());
    let target_local = remap_all(&free, &md, &[&target]).remove(0);

    let mut ideals = IdealComponents::new(free);
    let i_comp = ideals.component_hall(IdealKind::I, &md);
    let j_comp = ideals.component_hall(IdealKind::J, &md);
    let sum = i_comp.sum(&j_comp).unwrap();
    let listed_space = Subspace::from_sparse(comp_len, listed_local.iter()).unwrap();
    let idx = ideals.free.component(&md).to_vec();
    let i_basis = i_comp
        .basis()
        .iter()
        .map(|v| ideals.free.to_string(&v.remap(|k| Some(idx[k]))))
        .collect();
    JkReport {
        target: "[[[[x1,x2],x3],x3],x3]".into(),
        target_in_i: i_comp.contains_sparse(&target_local),
        target_in_sum: sum.contains_sparse(&target_local),
        i_dim: i_comp.dim(),
        j_dim: j_comp.dim(),
        component_dim: comp_len,
        listed_in_i: listed_space.is_subspace_of(&i_comp),
        listed_span_i: listed_space == i_comp,
        monomials_independent: mono.dim() == 4,
        i_basis,
    }
}

/// Rewrites Hall-indexed elements of one component in local component indices.
fn remap_all<F: Field>(free: &FreeLie<F>, md: &[usize], xs: &[&FreeLieElement<F>]) -> Vec<SparseVec<F>> {
    let idx = free.component(md);
    xs.iter().map(|x| x.remap(|k| idx.iter().position(|&i| i == k))).collect()
}

/// `check_eq_jk`: whether `[[[[x1,x2],x3],x3],x3] ∉ I + J`.
pub fn check_eq_jk() -> bool {
    jk_report::<crate::Q>().holds()
}

/// `F/(I+J)` truncated at total degree `max_degree`: a basis of Hall elements
/// complementing `I + J` in each component, brackets above the bound set to
/// zero.
pub struct TruncatedQuotient<F> {
    pub algebra: LieAlgebra<F>,
    /// Hall index of each quotient basis element.
    pub hall_index: Vec<usize>,
    pub multidegree: Vec<Multidegree>,
    pub ideals: IdealComponents<F>,
}

impl<F: Field> TruncatedQuotient<F> {
    pub fn new(max_degree: usize) -> Self {
        let gens = 3;
        let free = FreeLie::<F>::new(gens, max_degree);
        let mut ideals = IdealComponents::new(free);
        let mut hall_index = Vec::new();
        let mut mds = Vec::new();
        // per component: (ideal words, chosen Hall indices)
        let mut complement: BTreeMap<Multidegree, Vec<usize>> = BTreeMap::new();
        for d in 1..=max_degree {
            for md in multidegrees(gens, d) {
                let k = ideals.sum_words(&md);
                let mut span = k.clone();
                let mut chosen = Vec::new();
                for &h in ideals.free.component(&md).to_vec().iter() {
                    let e = ideals.free.expansions[h].clone();
                    let v = ideals.free.to_word_vec(&md, &e);
                    if !span.contains_sparse(&v) {
                        span = span.sum(&Subspace::from_sparse(span.ambient(), [&v]).unwrap()).unwrap();
                        chosen.push(h);
                    }
                }
                for &h in &chosen {
                    hall_index.push(h);
                    mds.push(md.clone());
                }
                complement.insert(md, chosen);
            }
        }
        let pos: HashMap<usize, usize> = hall_index.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        let n = hall_index.len();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let md = add_md(&mds[a], &mds[b]);
                if md.iter().sum::<usize>() > max_degree {
                    continue;
                }
                let (ea, eb) = (&ideals.free.expansions[hall_index[a]], &ideals.free.expansions[hall_index[b]]);
                let p = commutator(ea, eb);
                if p.is_empty() {
                    continue;
                }
                let target = ideals.free.to_word_vec(&md, &p);
                let k = ideals.sum_words(&md);
                let chosen = &complement[&md];
                let mut cols: Vec<SparseVec<F>> = k.basis().to_vec();
                let skip = cols.len();
                for &h in chosen {
                    let e = ideals.free.expansions[h].clone();
                    cols.push(ideals.free.to_word_vec(&md, &e));
                }
                let x = solve_combination(&cols, &target).expect("complement spans the component");
                let v = SparseVec::from_pairs(chosen.iter().zip(&x[skip..]).map(|(h, c)| (pos[h], c.clone())));
                if !v.is_zero() {
                    brackets.push((a, b, v));
                }
            }
        }
        let names = hall_index.iter().map(|&h| ideals.free.hall()[h].name.clone()).collect();
        let algebra = LieAlgebra::new(names, brackets).expect("quotient brackets well-formed");
        TruncatedQuotient { algebra, hall_index, multidegree: mds, ideals }
    }

    /// Quotient basis indices of one multidegree.
    pub fn component(&self, md: &[usize]) -> Vec<usize> {
        (0..self.multidegree.len()).filter(|&i| self.multidegree[i] == md).collect()
    }

    /// Multidegree of a homogeneous quotient vector, if it is homogeneous.
    pub fn multidegree_of(&self, v: &SparseVec<F>) -> Option<Multidegree> {
        let mut it = v.iter().map(|(k, _)| &self.multidegree[*k]);
        let first = it.next()?.clone();
        it.all(|m| *m == first).then_some(first)
    }
}

/// The truncated quotient as a plain algebra.
pub fn truncated_quotient<F: Field>(max_degree: usize) -> LieAlgebra<F> {
    TruncatedQuotient::<F>::new(max_degree).algebra
}

/// Witt's formula for the dimension of a multidegree component.
pub fn witt_dimension(md: &[usize]) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    fn mobius(mut n: usize) -> i64 {
        let mut m = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if n > 1 {
            m = -m;
        }
        m
    }
    fn multinomial(parts: &[usize]) -> i128 {
        let mut r: i128 = 1;
        let mut total = 0usize;
        for &k in parts {
            for i in 1..=k {
                total += 1;
                r = r * total as i128 / i as i128;
            }
        }
        r
    }
    let n: usize = md.iter().sum();
    if n == 0 {
        return 0;
    }
    let g = md.iter().fold(0, |a, &b| gcd(a, b));
    let mut s: i128 = 0;
    for d in 1..=g {
        if g % d == 0 {
            let parts: Vec<usize> = md.iter().map(|&k| k / d).collect();
            s += mobius(d) as i128 * multinomial(&parts);
        }
    }
    (s / n as i128) as usize
}
