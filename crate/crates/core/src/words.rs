//! Words and normal forms in the graph product G(Γ) of finite cyclic groups.
//!
//! Each vertex `v` contributes a generator `a_v` of order `order(v)`;
//! generators of adjacent vertices commute. An element is stored as a
//! reduced syllable sequence (no two syllables on the same vertex can be
//! brought together by commutations) in lexicographic trace normal form: of
//! all reorderings reachable by swapping adjacent commuting syllables, the one
//! whose vertex sequence is smallest. That representative is unique per
//! element, so normal forms can be compared and hashed directly.

use std::fmt;

use thiserror::Error;

use crate::graph_model::ProductGraph;

/// `a_v^exponent` with `1 ≤ exponent < order(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: u32,
}

impl Syllable {
    /// Reduces `exponent` modulo the vertex order; `None` for the identity.
    pub fn new(g: &ProductGraph, vertex: usize, exponent: i64) -> Option<Syllable> {
        let n = i64::from(g.order(vertex));
        let e = exponent.rem_euclid(n) as u32;
        (e != 0).then_some(Syllable { vertex, exponent: e })
    }

    pub fn inverse(self, g: &ProductGraph) -> Syllable {
        Syllable { vertex: self.vertex, exponent: g.order(self.vertex) - self.exponent }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown vertex {0:?} in word")]
    UnknownVertex(String),
    #[error("bad exponent in token {0:?}")]
    BadExponent(String),
}

/// An arbitrary product of generator powers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Syllable>);

impl Word {
    /// Parses whitespace-separated `id^e` tokens (`e` defaults to 1 and may be
    /// negative). Tokens whose exponent is a multiple of the order vanish.
    pub fn parse(g: &ProductGraph, text: &str) -> Result<Word, WordError> {
        let mut syllables = Vec::new();
        for token in text.split_whitespace() {
            let (id, exponent) = match token.split_once('^') {
                Some((id, e)) => (id, e.parse::<i64>().map_err(|_| WordError::BadExponent(token.to_owned()))?),
                None => (token, 1),
            };
            let v = g.index_of(id).ok_or_else(|| WordError::UnknownVertex(id.to_owned()))?;
            syllables.extend(Syllable::new(g, v, exponent));
        }
        Ok(Word(syllables))
    }

    pub fn from_ids(g: &ProductGraph, parts: &[(&str, i64)]) -> Result<Word, WordError> {
        parts
            .iter()
            .filter_map(|&(id, e)| match g.index_of(id) {
                Some(v) => Syllable::new(g, v, e).map(Ok),
                None => Some(Err(WordError::UnknownVertex(id.to_owned()))),
            })
            .collect::<Result<_, _>>()
            .map(Word)
    }
}

/// Canonical representative of an element of G(Γ).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NormalForm(Vec<Syllable>);

impl NormalForm {
    pub fn identity() -> NormalForm {
        NormalForm(Vec::new())
    }

    pub fn generator(g: &ProductGraph, v: usize) -> NormalForm {
        NormalForm(Syllable::new(g, v, 1).into_iter().collect())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertices occurring in the form.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|s| s.vertex)
    }

    /// Length in the word metric of the generating set {a_v}: each syllable
    /// `a_v^e` costs `min(e, order − e)` steps.
    pub fn word_length(&self, g: &ProductGraph) -> u32 {
        self.0.iter().map(|s| s.exponent.min(g.order(s.vertex) - s.exponent)).sum()
    }

    pub fn display<'a>(&'a self, g: &'a ProductGraph) -> WordDisplay<'a> {
        WordDisplay { g, syllables: &self.0 }
    }

    /// Text form: `id^e` tokens separated by single spaces, empty for the
    /// identity.
    pub fn to_text(&self, g: &ProductGraph) -> String {
        self.display(g).to_string()
    }

    pub fn parse(g: &ProductGraph, text: &str) -> Result<NormalForm, WordError> {
        Ok(normalize(g, &Word::parse(g, text)?))
    }

    /// Right multiplication by a single syllable.
    pub fn mul_syllable(&self, g: &ProductGraph, s: Syllable) -> NormalForm {
        let mut reduced = self.0.clone();
        push_reduced(g, &mut reduced, s);
        NormalForm(lex_order(g, reduced))
    }

    /// Re-expresses the form over another graph, mapping vertex indices.
    pub(crate) fn remap(&self, f: impl Fn(usize) -> usize) -> NormalForm {
        NormalForm(self.0.iter().map(|s| Syllable { vertex: f(s.vertex), exponent: s.exponent }).collect())
    }
}

pub struct WordDisplay<'a> {
    g: &'a ProductGraph,
    syllables: &'a [Syllable],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.g.id(s.vertex))?;
            if s.exponent != 1 {
                write!(f, "^{}", s.exponent)?;
            }
        }
        Ok(())
    }
}

/// Appends `s` to a reduced sequence, keeping it reduced.
///
/// Walking back over syllables that commute with `s`, the first syllable on
/// the same vertex (if reachable) absorbs it. Deleting a syllable that drops
/// to exponent 0 cannot enable further merges: everything after it commutes
/// with its vertex, so it never separated anything.
fn push_reduced(g: &ProductGraph, reduced: &mut Vec<Syllable>, s: Syllable) {
    let order = g.order(s.vertex);
    for i in (0..reduced.len()).rev() {
        let t = reduced[i];
        if t.vertex == s.vertex {
            let e = (t.exponent + s.exponent) % order;
            if e == 0 {
                reduced.remove(i);
            } else {
                reduced[i].exponent = e;
            }
            return;
        }
        if !g.adjacent(t.vertex, s.vertex) {
            break;
        }
    }
    reduced.push(s);
}

/// Lexicographically least rearrangement under commutation of adjacent
/// syllables: repeatedly emit the smallest vertex whose syllable can be moved
/// to the front.
fn lex_order(g: &ProductGraph, mut rest: Vec<Syllable>) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for j in 0..rest.len() {
            let v = rest[j].vertex;
            if best.is_some_and(|b| rest[b].vertex <= v) {
                continue;
            }
            if rest[..j].iter().all(|t| g.adjacent(t.vertex, v)) {
                best = Some(j);
            }
        }
        let b = best.expect("the first syllable is always movable");
        out.push(rest.remove(b));
    }
    out
}

pub fn normalize(g: &ProductGraph, w: &Word) -> NormalForm {
    let mut reduced = Vec::with_capacity(w.0.len());
    for &s in &w.0 {
        push_reduced(g, &mut reduced, s);
    }
    NormalForm(lex_order(g, reduced))
}

pub fn multiply(g: &ProductGraph, a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut reduced = a.0.clone();
    for &s in &b.0 {
        push_reduced(g, &mut reduced, s);
    }
    NormalForm(lex_order(g, reduced))
}

pub fn invert(g: &ProductGraph, a: &NormalForm) -> NormalForm {
    let w = Word(a.0.iter().rev().map(|s| s.inverse(g)).collect());
    normalize(g, &w)
}

/// The vertex `v` such that `b = a · a_v^{±1}`, if any. This is adjacency in
/// the undirected simple Cayley graph.
pub fn is_generator_step(g: &ProductGraph, a: &NormalForm, b: &NormalForm) -> Option<usize> {
    let d = multiply(g, &invert(g, a), b);
    match d.0.as_slice() {
        [s] if s.exponent == 1 || s.exponent == g.order(s.vertex) - 1 => Some(s.vertex),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vertices: &[(&str, u32)], edges: &[(&str, &str)]) -> ProductGraph {
        ProductGraph::new(vertices.iter().copied(), edges.iter().copied()).unwrap()
    }

    fn nf(g: &ProductGraph, text: &str) -> NormalForm {
        NormalForm::parse(g, text).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        let g = graph(&[("v", 5)], &[]);
        assert!(normalize(&g, &Word::default()).is_identity());
    }

    #[test]
    fn power_relator_vanishes() {
        let g = graph(&[("v", 7)], &[]);
        assert!(nf(&g, "v v v v v v v").is_identity());
        assert_eq!(nf(&g, "v v v").to_text(&g), "v^3");
        assert_eq!(nf(&g, "v^-1").to_text(&g), "v^6");
        assert!(nf(&g, "v^14").is_identity());
    }

    #[test]
    fn commuting_pair_cancels() {
        // Z2 x Z3: w u w^2 u = u^2 w^3 = 1
        let g = graph(&[("u", 2), ("w", 3)], &[("u", "w")]);
        assert!(nf(&g, "w u w^2 u").is_identity());
    }

    #[test]
    fn multiply_examples() {
        let g = graph(&[("u", 2), ("w", 3)], &[("u", "w")]);
        let u = nf(&g, "u");
        let w = nf(&g, "w");
        assert_eq!(multiply(&g, &u, &NormalForm::identity()), u);
        assert_eq!(multiply(&g, &u, &w), multiply(&g, &w, &u));
        assert_eq!(multiply(&g, &u, &w).to_text(&g), "u w");
        let v = graph(&[("v", 5)], &[]);
        assert!(multiply(&v, &nf(&v, "v"), &nf(&v, "v^4")).is_identity());
    }

    #[test]
    fn invert_examples() {
        let g = graph(&[("v", 6)], &[]);
        assert!(invert(&g, &NormalForm::identity()).is_identity());
        assert_eq!(invert(&g, &nf(&g, "v")).to_text(&g), "v^5");
    }

    #[test]
    fn free_product_keeps_order() {
        let g = graph(&[("a", 2), ("b", 2)], &[]);
        assert_eq!(nf(&g, "b a").to_text(&g), "b a");
        assert!(nf(&g, "a b b a").is_identity());
    }

    #[test]
    fn lexicographic_form_is_not_just_adjacent_sorting() {
        // 1 and 3 do not commute; 2 commutes with both. "3 1 2" equals "2 3 1".
        let g = graph(&[("1", 5), ("2", 5), ("3", 5)], &[("1", "2"), ("2", "3")]);
        let x = nf(&g, "3 1 2");
        let y = nf(&g, "2 3 1");
        assert_eq!(x, y);
        assert_eq!(x.to_text(&g), "2 3 1");
    }

    #[test]
    fn merge_across_commuting_syllables() {
        let g = graph(&[("a", 3), ("b", 3), ("c", 2)], &[("a", "b")]);
        assert_eq!(nf(&g, "a b a").to_text(&g), "a^2 b");
        // c blocks the merge
        assert_eq!(nf(&g, "a c a").to_text(&g), "a c a");
    }

    #[test]
    fn generator_steps() {
        let g = graph(&[("v", 5)], &[]);
        let one = NormalForm::identity();
        let v = g.index_of("v").unwrap();
        assert_eq!(is_generator_step(&g, &one, &nf(&g, "v")), Some(v));
        assert_eq!(is_generator_step(&g, &one, &nf(&g, "v^4")), Some(v));
        assert_eq!(is_generator_step(&g, &one, &nf(&g, "v^2")), None);
        assert_eq!(is_generator_step(&g, &one, &one), None);
    }

    #[test]
    fn word_errors() {
        let g = graph(&[("v", 5)], &[]);
        assert_eq!(Word::parse(&g, "x"), Err(WordError::UnknownVertex("x".into())));
        assert!(matches!(Word::parse(&g, "v^q"), Err(WordError::BadExponent(_))));
    }

    #[test]
    fn word_length_is_cyclic_distance() {
        let g = graph(&[("v", 7), ("a", 2)], &[]);
        assert_eq!(nf(&g, "v^5 a v^2").word_length(&g), 2 + 1 + 2);
    }
}
