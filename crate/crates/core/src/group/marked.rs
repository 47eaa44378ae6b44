use std::collections::VecDeque;

use super::element::{render_word, Element, Side, Syllable};
use super::spec::GroupSpec;
use super::GroupError;

/// Caps applied when building a group from a spec.
#[derive(Clone, Debug)]
pub struct Limits {
    pub max_rank: u32,
    pub max_modulus: u64,
    pub max_abs_generator: i64,
    pub max_depth: usize,
    pub max_generators: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rank: 64,
            max_modulus: 1 << 16,
            max_abs_generator: 1 << 20,
            max_depth: 16,
            max_generators: 1 << 16,
        }
    }
}

/// One entry of the generating set Σ.
#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub element: Element,
}

/// The concrete group behind a [`MarkedGroup`].
#[derive(Clone, Debug)]
pub enum Model {
    Free { rank: u32 },
    ZPow { rank: u32 },
    /// `gens` is the symmetrized, deduplicated generating set in Σ order.
    ZGens { gens: Vec<i64> },
    Cyclic { modulus: u64 },
    Prod(Box<MarkedGroup>, Box<MarkedGroup>),
    FProd(Box<MarkedGroup>, Box<MarkedGroup>),
}

/// A group with decidable normal form and an ordered symmetric generating set.
///
/// Σ is ordered by declaration, followed by the generated inverses; all
/// geodesic tie-breaking downstream keys off this order.
#[derive(Clone, Debug)]
pub struct MarkedGroup {
    spec: GroupSpec,
    model: Model,
    sigma: Vec<Generator>,
    inv_map: Vec<usize>,
}

/// Builds a marked group with default [`Limits`].
pub fn build_group(spec: &GroupSpec) -> Result<MarkedGroup, GroupError> {
    MarkedGroup::build(spec, &Limits::default())
}

impl MarkedGroup {
    pub fn build(spec: &GroupSpec, limits: &Limits) -> Result<MarkedGroup, GroupError> {
        if spec.depth() > limits.max_depth {
            return Err(GroupError::LimitExceeded(format!(
                "spec depth {} exceeds {}",
                spec.depth(),
                limits.max_depth
            )));
        }
        let group = Self::build_inner(spec, limits)?;
        if group.sigma.len() > limits.max_generators {
            return Err(GroupError::LimitExceeded(format!(
                "{} generators exceed the cap of {}",
                group.sigma.len(),
                limits.max_generators
            )));
        }
        Ok(group)
    }

    /// Parses and builds in one step.
    pub fn from_text(text: &str) -> Result<MarkedGroup, GroupError> {
        build_group(&super::parse_group_spec(text)?)
    }

    fn build_inner(spec: &GroupSpec, limits: &Limits) -> Result<MarkedGroup, GroupError> {
        let rank_check = |rank: u32| {
            if rank == 0 {
                Err(GroupError::Semantic { position: 0, message: "rank must be positive".into() })
            } else if rank > limits.max_rank {
                Err(GroupError::LimitExceeded(format!("rank {rank} exceeds {}", limits.max_rank)))
            } else {
                Ok(())
            }
        };
        match spec {
            GroupSpec::Free(rank) => {
                rank_check(*rank)?;
                let k = *rank as usize;
                let mut sigma = Vec::with_capacity(2 * k);
                for i in 1..=k as i32 {
                    sigma.push(Generator { label: render_word(&[i]), element: Element::Word(vec![i]) });
                }
                for i in 1..=k as i32 {
                    sigma.push(Generator { label: render_word(&[-i]), element: Element::Word(vec![-i]) });
                }
                let inv_map = (0..2 * k).map(|i| (i + k) % (2 * k)).collect();
                Ok(MarkedGroup { spec: spec.clone(), model: Model::Free { rank: *rank }, sigma, inv_map })
            }
            GroupSpec::ZPow(rank) => {
                rank_check(*rank)?;
                let k = *rank as usize;
                let unit = |i: usize, s: i64| {
                    let mut v = vec![0i64; k];
                    v[i] = s;
                    v
                };
                let mut sigma = Vec::with_capacity(2 * k);
                for i in 0..k {
                    sigma.push(Generator { label: format!("e{}", i + 1), element: Element::Vector(unit(i, 1)) });
                }
                for i in 0..k {
                    sigma.push(Generator { label: format!("-e{}", i + 1), element: Element::Vector(unit(i, -1)) });
                }
                let inv_map = (0..2 * k).map(|i| (i + k) % (2 * k)).collect();
                Ok(MarkedGroup { spec: spec.clone(), model: Model::ZPow { rank: *rank }, sigma, inv_map })
            }
            GroupSpec::ZGens(declared) => {
                if declared.is_empty() || declared.contains(&0) {
                    return Err(GroupError::Semantic {
                        position: 0,
                        message: "z generators must be a nonempty list of nonzero integers".into(),
                    });
                }
                if let Some(g) = declared.iter().find(|g| g.unsigned_abs() > limits.max_abs_generator as u64) {
                    return Err(GroupError::LimitExceeded(format!(
                        "z generator {g} exceeds {}",
                        limits.max_abs_generator
                    )));
                }
                let g = declared.iter().fold(0u64, |acc, &x| super::spec::gcd(acc, x.unsigned_abs()));
                if g != 1 {
                    return Err(GroupError::Semantic {
                        position: 0,
                        message: format!("z generators have gcd {g}; they must generate Z"),
                    });
                }
                let mut gens: Vec<i64> = Vec::new();
                for &x in declared.iter().chain(declared.iter().map(|x| -x).collect::<Vec<_>>().iter()) {
                    if !gens.contains(&x) {
                        gens.push(x);
                    }
                }
                let sigma = gens
                    .iter()
                    .map(|&x| Generator { label: x.to_string(), element: Element::Vector(vec![x]) })
                    .collect();
                let inv_map = gens
                    .iter()
                    .map(|&x| gens.iter().position(|&y| y == -x).expect("symmetrized"))
                    .collect();
                Ok(MarkedGroup { spec: spec.clone(), model: Model::ZGens { gens }, sigma, inv_map })
            }
            GroupSpec::CyclicFull(m) => {
                let m = *m;
                if m < 2 {
                    return Err(GroupError::Semantic {
                        position: 0,
                        message: format!("modulus must be at least 2, got {m}"),
                    });
                }
                if m > limits.max_modulus {
                    return Err(GroupError::LimitExceeded(format!("modulus {m} exceeds {}", limits.max_modulus)));
                }
                let sigma = (1..m)
                    .map(|r| Generator { label: r.to_string(), element: Element::Residue(r) })
                    .collect();
                let inv_map = (1..m).map(|r| (m - r - 1) as usize).collect();
                Ok(MarkedGroup { spec: spec.clone(), model: Model::Cyclic { modulus: m }, sigma, inv_map })
            }
            GroupSpec::Prod(l, r) => {
                let left = Self::build_inner(l, limits)?;
                let right = Self::build_inner(r, limits)?;
                let (le, re) = (left.identity(), right.identity());
                let nl = left.sigma.len();
                let mut sigma = Vec::with_capacity(nl + right.sigma.len());
                for g in &left.sigma {
                    sigma.push(Generator {
                        label: format!("({},e)", g.label),
                        element: Element::Pair(Box::new((g.element.clone(), re.clone()))),
                    });
                }
                for g in &right.sigma {
                    sigma.push(Generator {
                        label: format!("(e,{})", g.label),
                        element: Element::Pair(Box::new((le.clone(), g.element.clone()))),
                    });
                }
                let inv_map = left.inv_map.iter().copied().chain(right.inv_map.iter().map(|&j| j + nl)).collect();
                Ok(MarkedGroup {
                    spec: spec.clone(),
                    model: Model::Prod(Box::new(left), Box::new(right)),
                    sigma,
                    inv_map,
                })
            }
            GroupSpec::FProd(l, r) => {
                let left = Self::build_inner(l, limits)?;
                let right = Self::build_inner(r, limits)?;
                let nl = left.sigma.len();
                let mut sigma = Vec::with_capacity(nl + right.sigma.len());
                for (side, part, tag) in [(Side::Left, &left, 'L'), (Side::Right, &right, 'R')] {
                    for g in &part.sigma {
                        sigma.push(Generator {
                            label: format!("{tag}:{}", g.label),
                            element: Element::Syllables(vec![Syllable { side, element: g.element.clone() }]),
                        });
                    }
                }
                let inv_map = left.inv_map.iter().copied().chain(right.inv_map.iter().map(|&j| j + nl)).collect();
                Ok(MarkedGroup {
                    spec: spec.clone(),
                    model: Model::FProd(Box::new(left), Box::new(right)),
                    sigma,
                    inv_map,
                })
            }
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    pub fn generators(&self) -> &[Generator] {
        &self.sigma
    }

    pub fn num_generators(&self) -> usize {
        self.sigma.len()
    }

    pub fn generator(&self, index: usize) -> &Element {
        &self.sigma[index].element
    }

    /// Index of the inverse of generator `index`.
    pub fn inverse_index(&self, index: usize) -> usize {
        self.inv_map[index]
    }

    pub fn inv_map(&self) -> &[usize] {
        &self.inv_map
    }

    pub fn identity(&self) -> Element {
        match &self.model {
            Model::Free { .. } => Element::Word(Vec::new()),
            Model::ZPow { rank } => Element::Vector(vec![0; *rank as usize]),
            Model::ZGens { .. } => Element::Vector(vec![0]),
            Model::Cyclic { .. } => Element::Residue(0),
            Model::Prod(l, r) => Element::Pair(Box::new((l.identity(), r.identity()))),
            Model::FProd(..) => Element::Syllables(Vec::new()),
        }
    }

    pub fn is_identity(&self, g: &Element) -> bool {
        match g {
            Element::Word(w) => w.is_empty(),
            Element::Vector(v) => v.iter().all(|&x| x == 0),
            Element::Residue(r) => *r == 0,
            Element::Pair(p) => match &self.model {
                Model::Prod(l, r) => l.is_identity(&p.0) && r.is_identity(&p.1),
                _ => false,
            },
            Element::Syllables(s) => s.is_empty(),
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        match (&self.model, a, b) {
            (Model::Free { .. }, Element::Word(x), Element::Word(y)) => {
                let mut out = x.clone();
                for &letter in y {
                    if out.last() == Some(&-letter) {
                        out.pop();
                    } else {
                        out.push(letter);
                    }
                }
                Element::Word(out)
            }
            (Model::ZPow { .. } | Model::ZGens { .. }, Element::Vector(x), Element::Vector(y)) => {
                Element::Vector(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Model::Cyclic { modulus }, Element::Residue(x), Element::Residue(y)) => {
                Element::Residue((x + y) % modulus)
            }
            (Model::Prod(l, r), Element::Pair(x), Element::Pair(y)) => {
                Element::Pair(Box::new((l.multiply(&x.0, &y.0), r.multiply(&x.1, &y.1))))
            }
            (Model::FProd(l, r), Element::Syllables(x), Element::Syllables(y)) => {
                let mut out = x.clone();
                for syl in y {
                    match out.last_mut() {
                        Some(last) if last.side == syl.side => {
                            let factor = if syl.side == Side::Left { l } else { r };
                            let merged = factor.multiply(&last.element, &syl.element);
                            if factor.is_identity(&merged) {
                                out.pop();
                            } else {
                                last.element = merged;
                            }
                        }
                        _ => out.push(syl.clone()),
                    }
                }
                Element::Syllables(out)
            }
            _ => panic!("element does not belong to {}", self.spec),
        }
    }

    pub fn inverse(&self, a: &Element) -> Element {
        match (&self.model, a) {
            (Model::Free { .. }, Element::Word(x)) => Element::Word(x.iter().rev().map(|l| -l).collect()),
            (Model::ZPow { .. } | Model::ZGens { .. }, Element::Vector(x)) => {
                Element::Vector(x.iter().map(|p| -p).collect())
            }
            (Model::Cyclic { modulus }, Element::Residue(x)) => Element::Residue((modulus - x) % modulus),
            (Model::Prod(l, r), Element::Pair(x)) => Element::Pair(Box::new((l.inverse(&x.0), r.inverse(&x.1)))),
            (Model::FProd(l, r), Element::Syllables(x)) => Element::Syllables(
                x.iter()
                    .rev()
                    .map(|s| Syllable {
                        side: s.side,
                        element: if s.side == Side::Left { l.inverse(&s.element) } else { r.inverse(&s.element) },
                    })
                    .collect(),
            ),
            _ => panic!("element does not belong to {}", self.spec),
        }
    }

    /// `g · σ_index`, one step along a Cayley-graph edge.
    pub fn step(&self, g: &Element, index: usize) -> Element {
        self.multiply(g, &self.sigma[index].element)
    }

    /// Product of the generators named by `word`, left to right.
    pub fn evaluate(&self, word: &[usize]) -> Element {
        word.iter().fold(self.identity(), |acc, &i| self.step(&acc, i))
    }

    /// Parses a word over generator labels, separated by whitespace or by
    /// commas outside parentheses;
    /// an unseparated run is split greedily by longest matching label.
    /// `e` or an empty string is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Element, GroupError> {
        let mut word = Vec::new();
        let mut offset = 0;
        for token in split_tokens(text) {
            let start = offset;
            offset += token.len() + 1;
            if token.is_empty() || token == "e" {
                continue;
            }
            if let Some(i) = self.sigma.iter().position(|g| g.label == token) {
                word.push(i);
                continue;
            }
            let mut rest = token;
            while !rest.is_empty() {
                let best = (0..self.sigma.len())
                    .filter(|&i| rest.starts_with(self.sigma[i].label.as_str()))
                    .max_by_key(|&i| (self.sigma[i].label.len(), std::cmp::Reverse(i)));
                let Some(i) = best else {
                    return Err(GroupError::Syntax {
                        position: start + token.len() - rest.len(),
                        expected: format!("a generator label of {}", self.spec),
                    });
                };
                word.push(i);
                rest = &rest[self.sigma[i].label.len()..];
            }
        }
        Ok(self.evaluate(&word))
    }

    /// `g^k` for `k >= 0`.
    pub fn power(&self, g: &Element, k: u64) -> Element {
        let mut result = self.identity();
        let mut base = g.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.multiply(&result, &base);
            }
            base = self.multiply(&base, &base);
            k >>= 1;
        }
        result
    }

    /// Word length `|g|_Σ` computed from the normal form.
    ///
    /// Independent of ball enumeration: free words count letters, abelian
    /// vectors use the L1 norm, products and free products add factor
    /// lengths, and `z(...)` runs a shortest-path search on an interval.
    pub fn word_length(&self, g: &Element) -> u64 {
        match (&self.model, g) {
            (Model::Free { .. }, Element::Word(w)) => w.len() as u64,
            (Model::ZPow { .. }, Element::Vector(v)) => v.iter().map(|x| x.unsigned_abs()).sum(),
            (Model::ZGens { gens }, Element::Vector(v)) => zgens_length(gens, v[0]),
            (Model::Cyclic { .. }, Element::Residue(r)) => u64::from(*r != 0),
            (Model::Prod(l, r), Element::Pair(p)) => l.word_length(&p.0) + r.word_length(&p.1),
            (Model::FProd(l, r), Element::Syllables(s)) => s
                .iter()
                .map(|syl| if syl.side == Side::Left { l.word_length(&syl.element) } else { r.word_length(&syl.element) })
                .sum(),
            _ => panic!("element does not belong to {}", self.spec),
        }
    }

    /// Lexicographically least geodesic word for `g`, built greedily: at
    /// each step take the smallest generator index that lowers the
    /// remaining length by one.
    pub fn geodesic_word(&self, g: &Element) -> Vec<usize> {
        let mut rest = g.clone();
        let mut len = self.word_length(&rest);
        let mut word = Vec::with_capacity(len as usize);
        while len > 0 {
            let (i, next) = (0..self.sigma.len())
                .map(|i| (i, self.multiply(&self.sigma[self.inv_map[i]].element, &rest)))
                .find(|(_, next)| self.word_length(next) + 1 == len)
                .expect("some generator shortens a nontrivial element");
            word.push(i);
            rest = next;
            len -= 1;
        }
        word
    }

    /// `d_Σ(g, h) = |g⁻¹h|_Σ`.
    pub fn distance(&self, g: &Element, h: &Element) -> u64 {
        self.word_length(&self.multiply(&self.inverse(g), h))
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<u64> {
        match &self.model {
            Model::Cyclic { modulus } => Some(*modulus),
            Model::Prod(l, r) => Some(l.order()?.checked_mul(r.order()?)?),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        match &self.model {
            Model::Cyclic { .. } => true,
            Model::Prod(l, r) => l.is_finite() && r.is_finite(),
            _ => false,
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        match &self.model {
            Model::Free { .. } | Model::ZPow { .. } | Model::ZGens { .. } => true,
            Model::Cyclic { .. } => false,
            Model::Prod(l, r) | Model::FProd(l, r) => l.is_torsion_free() && r.is_torsion_free(),
        }
    }
}

/// Word length of `n` in `Z` for a symmetric generating set.
///
/// A minimal word can be reordered so its partial sums stay in
/// `[-m, |n| + m]` (`m` the largest generator), so a BFS on that interval
/// is exact.
fn zgens_length(gens: &[i64], n: i64) -> u64 {
    let target = n.unsigned_abs() as i64;
    if target == 0 {
        return 0;
    }
    let m = gens.iter().map(|g| g.abs()).max().unwrap_or(1);
    if gens.contains(&target) {
        return 1;
    }
    let lo = -m;
    let hi = target + m;
    let size = (hi - lo + 1) as usize;
    let mut dist = vec![u32::MAX; size];
    let mut queue = VecDeque::new();
    dist[(0 - lo) as usize] = 0;
    queue.push_back(0i64);
    while let Some(x) = queue.pop_front() {
        let dx = dist[(x - lo) as usize];
        for &g in gens {
            let y = x + g;
            if y < lo || y > hi {
                continue;
            }
            let slot = &mut dist[(y - lo) as usize];
            if *slot == u32::MAX {
                *slot = dx + 1;
                if y == target {
                    return u64::from(dx + 1);
                }
                queue.push_back(y);
            }
        }
    }
    unreachable!("generators with gcd 1 reach every integer")
}

/// Splits on whitespace and on commas at parenthesis depth zero, keeping
/// positions aligned with `text` (every separator is one byte).
fn split_tokens(text: &str) -> Vec<&str> {
    let mut tokens = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ' ' | '\t' | '\n' => {
                tokens.push(&text[start..i]);
                start = i + 1;
            }
            ',' if depth == 0 => {
                tokens.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    tokens.push(&text[start..]);
    tokens
}
