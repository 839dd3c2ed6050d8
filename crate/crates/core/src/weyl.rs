//! Weyl group tables: elements as matrices on fundamental-weight coordinates,
//! Bruhat order, Möbius function, minimal coset representatives and the
//! Demazure (0-Hecke) product.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};

/// Dense index of an element in a [`WeylGroup`]. The identity is always 0.
pub type ElementId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub id: ElementId,
    /// Row-major `r×r` action on fundamental-weight coordinates.
    pub matrix: Vec<i64>,
    pub length: usize,
    /// Lexicographically smallest reduced word (0-based generators).
    pub word: Vec<usize>,
}

/// The Weyl group of a root system with its multiplication table and Bruhat
/// order. Elements are ordered by `(length, lexicographically smallest
/// reduced word)`.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    by_matrix: HashMap<Vec<i64>, ElementId>,
    mult: Vec<ElementId>,
    inverse: Vec<ElementId>,
    bruhat: Vec<bool>,
    longest: ElementId,
}

/// Formats a word with 1-based generator indices, e.g. `"1,2,1"`.
pub fn format_word(word: &[usize]) -> String {
    let mut s = String::new();
    for (k, i) in word.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", i + 1);
    }
    s
}

/// Parses a comma-separated word of 1-based generator indices. The empty
/// string (or `"e"`) is the empty word.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let i: usize = tok
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad generator {tok:?}: {e}")))?;
            if i == 0 || i > rank {
                return Err(Error::GeneratorOutOfRange { index: i, rank });
            }
            Ok(i - 1)
        })
        .collect()
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x != 0 {
                for j in 0..r {
                    c[i * r + j] += x * b[k * r + j];
                }
            }
        }
    }
    c
}

fn identity_matrix(r: usize) -> Vec<i64> {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

/// Serialized form of a generated group, used by the on-disk cache.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WeylGroupRecord {
    pub type_label: String,
    pub elements: Vec<ElementRecord>,
    /// Row `y` has a `1` in column `w` iff `y ≤ w`.
    pub bruhat: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElementRecord {
    pub id: ElementId,
    pub length: usize,
    pub word: String,
    pub matrix: Vec<Vec<i64>>,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Self {
        let r = rs.rank();
        let gens: Vec<Vec<i64>> = (0..r).map(|i| simple_reflection_matrix(rs, i)).collect();

        // Level-by-level BFS; the lexicographically smallest reduced word of w
        // is the minimum over u = w s_i (one shorter) of word(u) + [i].
        let mut elements = vec![WeylElement {
            id: 0,
            matrix: identity_matrix(r),
            length: 0,
            word: Vec::new(),
        }];
        let mut by_matrix: HashMap<Vec<i64>, ElementId> = HashMap::new();
        by_matrix.insert(identity_matrix(r), 0);
        let mut level: Vec<ElementId> = vec![0];
        let mut length = 0;
        loop {
            length += 1;
            let mut next: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
            for &u in &level {
                for (i, g) in gens.iter().enumerate() {
                    let m = mat_mul(&elements[u].matrix, g, r);
                    if by_matrix.contains_key(&m) {
                        continue;
                    }
                    let mut word = elements[u].word.clone();
                    word.push(i);
                    next.entry(m)
                        .and_modify(|best| {
                            if word < *best {
                                *best = word.clone();
                            }
                        })
                        .or_insert(word);
                }
            }
            if next.is_empty() {
                break;
            }
            let mut fresh: Vec<(Vec<usize>, Vec<i64>)> =
                next.into_iter().map(|(m, w)| (w, m)).collect();
            fresh.sort();
            level.clear();
            for (word, matrix) in fresh {
                let id = elements.len();
                by_matrix.insert(matrix.clone(), id);
                elements.push(WeylElement {
                    id,
                    matrix,
                    length,
                    word,
                });
                level.push(id);
            }
        }
        Self::assemble(rs.clone(), elements, by_matrix, None)
    }

    fn assemble(
        rs: RootSystem,
        elements: Vec<WeylElement>,
        by_matrix: HashMap<Vec<i64>, ElementId>,
        bruhat: Option<Vec<bool>>,
    ) -> Self {
        let r = rs.rank();
        let n = elements.len();
        let mut mult = vec![0; n * n];
        for a in &elements {
            for b in &elements {
                let m = mat_mul(&a.matrix, &b.matrix, r);
                mult[a.id * n + b.id] = by_matrix[&m];
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| mult[a * n + b] == 0).expect("group");
        }
        let longest = (0..n).max_by_key(|&k| elements[k].length).unwrap_or(0);
        let mut wg = WeylGroup {
            rs,
            elements,
            by_matrix,
            mult,
            inverse,
            bruhat: Vec::new(),
            longest,
        };
        wg.bruhat = match bruhat {
            Some(b) => b,
            None => wg.bruhat_table(),
        };
        wg
    }

    /// Bruhat order by the descent recursion, filled in order of increasing
    /// `ℓ(w)`: pick `s` with `sw < w`; then `y ≤ w` iff `sy ≤ sw` when
    /// `sy < y`, and `y ≤ sw` otherwise.
    fn bruhat_table(&self) -> Vec<bool> {
        let n = self.len();
        let mut t = vec![false; n * n];
        for w in 0..n {
            if self.elements[w].length == 0 {
                t[w] = true; // e ≤ e
                continue;
            }
            let s = self.elements[w].word[0];
            let sw = self.left_mul_simple(s, w);
            for y in 0..n {
                let sy = self.left_mul_simple(s, y);
                t[y * n + w] = if self.length(sy) < self.length(y) {
                    t[sy * n + sw]
                } else {
                    t[y * n + sw]
                };
            }
        }
        t
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> &WeylElement {
        &self.elements[id]
    }

    pub fn ids(&self) -> std::ops::Range<ElementId> {
        0..self.len()
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn longest(&self) -> ElementId {
        self.longest
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.elements[w].length
    }

    pub fn word(&self, w: ElementId) -> &[usize] {
        &self.elements[w].word
    }

    pub fn simple(&self, i: usize) -> ElementId {
        self.by_matrix[&simple_reflection_matrix(&self.rs, i)]
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mult[a * self.len() + b]
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        self.inverse[w]
    }

    pub fn left_mul_simple(&self, i: usize, w: ElementId) -> ElementId {
        self.mul(self.simple(i), w)
    }

    pub fn right_mul_simple(&self, w: ElementId, i: usize) -> ElementId {
        self.mul(w, self.simple(i))
    }

    /// The element represented by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<ElementId> {
        let r = self.rank();
        word.iter().try_fold(self.identity(), |acc, &i| {
            if i >= r {
                Err(Error::GeneratorOutOfRange {
                    index: i + 1,
                    rank: r,
                })
            } else {
                Ok(self.right_mul_simple(acc, i))
            }
        })
    }

    /// Like [`from_word`](Self::from_word) but rejects non-reduced words.
    pub fn from_reduced_word(&self, word: &[usize]) -> Result<ElementId> {
        let w = self.from_word(word)?;
        if self.length(w) != word.len() {
            return Err(Error::NotReduced(format_word(word)));
        }
        Ok(w)
    }

    /// `w·λ`.
    pub fn act(&self, w: ElementId, lambda: &Weight) -> Weight {
        let r = self.rank();
        let m = &self.elements[w].matrix;
        Weight::new((0..r).map(|i| (0..r).map(|j| m[i * r + j] * lambda[j]).sum()))
    }

    /// Number of positive roots sent to negative roots, computed from the
    /// matrix action (independent of the stored length).
    pub fn inversion_count(&self, w: ElementId) -> usize {
        self.rs
            .positive_roots()
            .iter()
            .filter(|root| {
                let image = self.act(w, &root.weight);
                let n = self.rs.root_coords(&image).expect("roots map to roots");
                n.iter().all(|&c| c <= 0)
            })
            .count()
    }

    pub fn bruhat_leq(&self, y: ElementId, w: ElementId) -> bool {
        self.bruhat[y * self.len() + w]
    }

    /// Möbius function of the Bruhat order: `(-1)^{ℓ(w)-ℓ(y)}` if `y ≤ w`.
    pub fn mobius(&self, y: ElementId, w: ElementId) -> i64 {
        if self.bruhat_leq(y, w) {
            sign(self.length(w) - self.length(y))
        } else {
            0
        }
    }

    /// Elements `y ≤ w`, in canonical order.
    pub fn interval_below(&self, w: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.ids().filter(move |&y| self.bruhat_leq(y, w))
    }

    /// Elements `z ≥ x`, in canonical order.
    pub fn interval_above(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.ids().filter(move |&z| self.bruhat_leq(x, z))
    }

    /// Every reduced word of `w`, lexicographically sorted.
    pub fn reduced_words(&self, w: ElementId) -> Vec<Vec<usize>> {
        let mut memo: HashMap<ElementId, Vec<Vec<usize>>> = HashMap::new();
        let mut out = self.reduced_words_rec(w, &mut memo);
        out.sort();
        out
    }

    fn reduced_words_rec(
        &self,
        w: ElementId,
        memo: &mut HashMap<ElementId, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(v) = memo.get(&w) {
            return v.clone();
        }
        let out = if self.length(w) == 0 {
            vec![Vec::new()]
        } else {
            let mut out = Vec::new();
            for i in 0..self.rank() {
                let u = self.right_mul_simple(w, i);
                if self.length(u) < self.length(w) {
                    for mut word in self.reduced_words_rec(u, memo) {
                        word.push(i);
                        out.push(word);
                    }
                }
            }
            out
        };
        memo.insert(w, out.clone());
        out
    }

    /// The 0-Hecke product `y ⋆ z`: fold a reduced word of `z` into `y`,
    /// multiplying by `s_i` only when that increases the length.
    pub fn demazure_product(&self, y: ElementId, z: ElementId) -> ElementId {
        self.word(z).iter().fold(y, |acc, &i| {
            let next = self.right_mul_simple(acc, i);
            if self.length(next) > self.length(acc) {
                next
            } else {
                acc
            }
        })
    }

    /// The unique dominant weight in the orbit `Wν`.
    pub fn dominant_in_orbit(&self, nu: &Weight) -> Weight {
        let mut mu = nu.clone();
        while let Some(i) = mu.iter().position(|&c| c < 0) {
            mu = self.rs.reflect(i, &mu);
        }
        mu
    }

    /// `(w_min, μ)` with `μ` dominant, `ν = w_min μ` and `w_min` of minimal
    /// length among such elements.
    pub fn minimal_coset_data(&self, nu: &Weight) -> (ElementId, Weight) {
        let mu = self.dominant_in_orbit(nu);
        // canonical order is by length first
        let w = self
            .ids()
            .find(|&w| self.act(w, &mu) == *nu)
            .expect("ν lies in the orbit of its dominant representative");
        (w, mu)
    }

    /// The isotropy group `W_μ`.
    pub fn stabilizer(&self, mu: &Weight) -> Vec<ElementId> {
        self.ids().filter(|&w| self.act(w, mu) == *mu).collect()
    }

    /// Whether `x` has minimal length in its coset `x W_μ`.
    pub fn is_min_in_coset(&self, x: ElementId, mu: &Weight) -> bool {
        self.stabilizer(mu)
            .into_iter()
            .all(|s| self.length(self.mul(x, s)) >= self.length(x))
    }

    /// Whether `x` has maximal length in its coset `x W_μ`.
    pub fn is_max_in_coset(&self, x: ElementId, mu: &Weight) -> bool {
        self.stabilizer(mu)
            .into_iter()
            .all(|s| self.length(self.mul(x, s)) <= self.length(x))
    }

    /// Minimal-length representative of `x W_μ`.
    pub fn min_coset_rep(&self, x: ElementId, mu: &Weight) -> ElementId {
        self.stabilizer(mu)
            .into_iter()
            .map(|s| self.mul(x, s))
            .min_by_key(|&y| (self.length(y), y))
            .expect("stabilizer contains e")
    }

    /// The orbit `Wμ` without repetition, in order of first appearance.
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::HashSet::new();
        self.ids()
            .map(|w| self.act(w, mu))
            .filter(|nu| seen.insert(nu.clone()))
            .collect()
    }

    pub fn to_record(&self) -> WeylGroupRecord {
        let r = self.rank();
        let n = self.len();
        WeylGroupRecord {
            type_label: self.rs.label(),
            elements: self
                .elements
                .iter()
                .map(|e| ElementRecord {
                    id: e.id,
                    length: e.length,
                    word: format_word(&e.word),
                    matrix: e.matrix.chunks(r).map(<[i64]>::to_vec).collect(),
                })
                .collect(),
            bruhat: (0..n)
                .map(|y| {
                    (0..n)
                        .map(|w| if self.bruhat_leq(y, w) { '1' } else { '0' })
                        .collect()
                })
                .collect(),
        }
    }

    /// Rebuilds a group from a cached record. Matrices are recomputed from
    /// the stored words and must match the stored ones.
    pub fn from_record(rs: &RootSystem, rec: &WeylGroupRecord) -> Result<Self> {
        let bad = |msg: &str| Error::Cache(format!("{}: {msg}", rec.type_label));
        if rec.type_label != rs.label() {
            return Err(bad("type label mismatch"));
        }
        let r = rs.rank();
        let gens: Vec<Vec<i64>> = (0..r).map(|i| simple_reflection_matrix(rs, i)).collect();
        let n = rec.elements.len();
        let mut elements = Vec::with_capacity(n);
        let mut by_matrix = HashMap::new();
        for (k, e) in rec.elements.iter().enumerate() {
            let word = parse_word(&e.word, r)?;
            let matrix = word
                .iter()
                .fold(identity_matrix(r), |m, &i| mat_mul(&m, &gens[i], r));
            let stored: Vec<i64> = e.matrix.iter().flatten().copied().collect();
            if e.id != k || stored != matrix || e.length != word.len() {
                return Err(bad("inconsistent element record"));
            }
            if by_matrix.insert(matrix.clone(), k).is_some() {
                return Err(bad("duplicate element"));
            }
            elements.push(WeylElement {
                id: k,
                matrix,
                length: e.length,
                word,
            });
        }
        if rec.bruhat.len() != n || rec.bruhat.iter().any(|row| row.len() != n) {
            return Err(bad("bruhat matrix has wrong shape"));
        }
        let bruhat = rec
            .bruhat
            .iter()
            .flat_map(|row| row.chars().map(|c| c == '1'))
            .collect();
        // closure check: every product of generators must be present
        for e in &elements {
            for g in &gens {
                if !by_matrix.contains_key(&mat_mul(&e.matrix, g, r)) {
                    return Err(bad("element table is not closed"));
                }
            }
        }
        Ok(Self::assemble(
            rs.clone(),
            elements,
            by_matrix,
            Some(bruhat),
        ))
    }
}

/// `(-1)^k`.
pub fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn simple_reflection_matrix(rs: &RootSystem, i: usize) -> Vec<i64> {
    // λ'_k = λ_k - λ_i (α_i)_k
    let r = rs.rank();
    let alpha = rs.simple_root(i);
    let mut m = identity_matrix(r);
    for k in 0..r {
        m[k * r + i] -= alpha[k];
    }
    m
}

/// Möbius function of the Bruhat order by inverting its zeta matrix over the
/// integers. Returned row-major: entry `y·|W| + w` is `μ(y, w)`.
///
/// The zeta matrix is unitriangular in the canonical (length-refining)
/// order, so back substitution suffices.
pub fn mobius_by_zeta_inversion(wg: &WeylGroup) -> Vec<i64> {
    let n = wg.len();
    let zeta = |y: usize, w: usize| i64::from(wg.bruhat_leq(y, w));
    let mut mu = vec![0i64; n * n];
    for y in 0..n {
        mu[y * n + y] = 1;
        // Σ_{y ≤ z ≤ w} μ(y,z) ζ(z,w) = δ(y,w)  ⇒  solve for μ(y,w), w > y in order
        for w in (y + 1)..n {
            let s: i64 = (y..w).map(|z| mu[y * n + z] * zeta(z, w)).sum();
            mu[y * n + w] = -s;
        }
    }
    mu
}
