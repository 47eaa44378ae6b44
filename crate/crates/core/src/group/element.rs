use std::fmt;

/// Which factor of a free product a syllable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// A maximal run of a free-product normal form lying in one factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub side: Side,
    pub element: Element,
}

/// Canonical normal form of a group element.
///
/// Two elements of the same group are equal iff their normal forms are
/// identical, so `Eq`/`Hash` are the group's equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Freely reduced word. Letter `i > 0` is basis element `i`, `-i` its inverse.
    Word(Vec<i32>),
    /// Integer vector (`zpow`, and `z(...)` as a length-one vector).
    Vector(Vec<i64>),
    /// Residue in `0..m`.
    Residue(u64),
    /// Direct-product pair.
    Pair(Box<(Element, Element)>),
    /// Alternating non-identity syllables of a free product.
    Syllables(Vec<Syllable>),
}

impl Element {
    /// Approximate heap footprint in bytes, used for memory accounting.
    pub fn heap_bytes(&self) -> usize {
        match self {
            Element::Word(w) => w.capacity() * std::mem::size_of::<i32>(),
            Element::Vector(v) => v.capacity() * std::mem::size_of::<i64>(),
            Element::Residue(_) => 0,
            Element::Pair(p) => {
                std::mem::size_of::<(Element, Element)>() + p.0.heap_bytes() + p.1.heap_bytes()
            }
            Element::Syllables(s) => {
                s.capacity() * std::mem::size_of::<Syllable>()
                    + s.iter().map(|x| x.element.heap_bytes()).sum::<usize>()
            }
        }
    }
}

/// Renders a reduced free word over the alphabet `a1, a1-, a2, a2-, ...`,
/// letters concatenated, `e` for the empty word.
pub fn render_word(letters: &[i32]) -> String {
    if letters.is_empty() {
        return "e".to_string();
    }
    let mut out = String::new();
    for &l in letters {
        out.push('a');
        out.push_str(&l.unsigned_abs().to_string());
        if l < 0 {
            out.push('-');
        }
    }
    out
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Word(w) => f.write_str(&render_word(w)),
            Element::Vector(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            Element::Residue(r) => write!(f, "{r}"),
            Element::Pair(p) => write!(f, "<{}|{}>", p.0, p.1),
            Element::Syllables(s) => {
                if s.is_empty() {
                    return f.write_str("e");
                }
                for syl in s {
                    let tag = match syl.side {
                        Side::Left => 'L',
                        Side::Right => 'R',
                    };
                    write!(f, "{tag}{{{}}}", syl.element)?;
                }
                Ok(())
            }
        }
    }
}

/// Elements serialize as their normal-form string.
impl serde::Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
