use std::io::{self, Write};

use indexmap::IndexMap;
use serde::Serialize;

use super::CayleyError;
use crate::group::{Element, MarkedGroup};

pub const DEFAULT_MEM_CAP: usize = 4 << 30;

#[derive(Clone, Copy, Debug)]
struct Node {
    dist: u32,
    /// (index of predecessor, generator index); `None` for the identity.
    parent: Option<(usize, usize)>,
}

/// Exact word-metric ball `B(e, R)` with spheres and one geodesic per element.
///
/// Elements are stored in discovery order, which is the lexicographic order
/// (by generator-index sequence) of their least geodesic words. Parent links
/// therefore spell the lexicographically least geodesic.
#[derive(Clone, Debug)]
pub struct BallTable {
    group: MarkedGroup,
    radius: u32,
    nodes: IndexMap<Element, Node>,
    sphere_starts: Vec<usize>,
}

/// Rough per-element cost of the visited set, beyond the element's own heap.
fn entry_bytes(element: &Element) -> usize {
    std::mem::size_of::<Element>() + std::mem::size_of::<Node>() + 24 + element.heap_bytes()
}

/// Breadth-first enumeration of `B(e, radius)`.
///
/// Fails with [`CayleyError::MemCapExceeded`] rather than truncating.
pub fn enumerate_ball(group: &MarkedGroup, radius: u32, mem_cap: usize) -> Result<BallTable, CayleyError> {
    let mut nodes: IndexMap<Element, Node> = IndexMap::new();
    let e = group.identity();
    let mut bytes = entry_bytes(&e);
    nodes.insert(e, Node { dist: 0, parent: None });
    let mut sphere_starts = vec![0, 1];
    for r in 0..radius {
        let (start, end) = (sphere_starts[r as usize], sphere_starts[r as usize + 1]);
        for idx in start..end {
            let (g, _) = nodes.get_index(idx).expect("index in range");
            let g = g.clone();
            for gen in 0..group.num_generators() {
                let h = group.step(&g, gen);
                if nodes.contains_key(&h) {
                    continue;
                }
                bytes += entry_bytes(&h);
                if bytes > mem_cap {
                    return Err(CayleyError::MemCapExceeded {
                        last_completed_radius: r,
                        bytes,
                        cap: mem_cap,
                    });
                }
                nodes.insert(h, Node { dist: r + 1, parent: Some((idx, gen)) });
            }
        }
        sphere_starts.push(nodes.len());
    }
    Ok(BallTable { group: group.clone(), radius, nodes, sphere_starts })
}

#[derive(Serialize)]
struct BallRecord {
    nf: String,
    dist: u32,
    parent: Option<String>,
    gen: Option<usize>,
}

impl BallTable {
    pub fn group(&self) -> &MarkedGroup {
        &self.group
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.nodes.contains_key(g)
    }

    /// Position of `g` in enumeration order.
    pub fn index_of(&self, g: &Element) -> Option<usize> {
        self.nodes.get_index_of(g)
    }

    pub fn element(&self, index: usize) -> &Element {
        self.nodes.get_index(index).expect("index in range").0
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = &Element> + '_ {
        self.nodes.keys()
    }

    /// Elements at distance exactly `r`, in lexicographic geodesic order.
    pub fn sphere(&self, r: u32) -> impl Iterator<Item = &Element> + '_ {
        let r = r as usize;
        let (start, end) = if r + 1 < self.sphere_starts.len() {
            (self.sphere_starts[r], self.sphere_starts[r + 1])
        } else {
            (0, 0)
        };
        (start..end).map(move |i| self.element(i))
    }

    pub fn sphere_sizes(&self) -> Vec<u64> {
        self.sphere_starts.windows(2).map(|w| (w[1] - w[0]) as u64).collect()
    }

    /// `|B(e, r)|` for `r = 0..=radius`.
    pub fn ball_sizes(&self) -> Vec<u64> {
        self.sphere_starts[1..].iter().map(|&n| n as u64).collect()
    }

    /// Word length of an enumerated element.
    pub fn word_length(&self, g: &Element) -> Result<u32, CayleyError> {
        self.nodes
            .get(g)
            .map(|n| n.dist)
            .ok_or_else(|| CayleyError::OutOfRange(format!("{g} is not in B(e,{})", self.radius)))
    }

    pub fn dist_at(&self, index: usize) -> u32 {
        self.nodes[index].dist
    }

    /// Predecessor index and generator on the chosen geodesic.
    pub fn parent_at(&self, index: usize) -> Option<(usize, usize)> {
        self.nodes[index].parent
    }

    /// Lexicographically least geodesic word (generator indices) for `g`.
    pub fn geodesic(&self, g: &Element) -> Result<Vec<usize>, CayleyError> {
        let mut idx = self
            .index_of(g)
            .ok_or_else(|| CayleyError::OutOfRange(format!("{g} is not in B(e,{})", self.radius)))?;
        let mut word = Vec::with_capacity(self.nodes[idx].dist as usize);
        while let Some((p, gen)) = self.nodes[idx].parent {
            word.push(gen);
            idx = p;
        }
        word.reverse();
        Ok(word)
    }

    /// Vertices of the chosen geodesic from `g` to `h`, i.e. `g` times the
    /// prefixes of the least geodesic word of `g⁻¹h`.
    pub fn geodesic_path(&self, g: &Element, h: &Element) -> Result<Vec<Element>, CayleyError> {
        let group = &self.group;
        let word = self.geodesic(&group.multiply(&group.inverse(g), h))?;
        let mut path = Vec::with_capacity(word.len() + 1);
        let mut cur = g.clone();
        path.push(cur.clone());
        for gen in word {
            cur = group.step(&cur, gen);
            path.push(cur.clone());
        }
        Ok(path)
    }

    /// JSON Lines export, one record per element in enumeration order.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (g, node) in &self.nodes {
            let record = BallRecord {
                nf: g.to_string(),
                dist: node.dist,
                parent: node.parent.map(|(p, _)| self.element(p).to_string()),
                gen: node.parent.map(|(_, gen)| gen),
            };
            serde_json::to_writer(&mut out, &record)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}


#[cfg(test)]
mod dual_route {
    use super::*;

    #[test]
    fn ball_geodesics_match_greedy_geodesics() {
        for text in ["free(2)", "zpow(2)", "z(1,2,3)", "z(2,3)", "prod(free(1),cyclic(4))", "fprod(z(1),z(2,3))", "fprod(cyclic(2),cyclic(3))"] {
            let group = MarkedGroup::from_text(text).unwrap();
            let ball = enumerate_ball(&group, 4, DEFAULT_MEM_CAP).unwrap();
            for (i, g) in ball.elements().enumerate() {
                assert_eq!(u64::from(ball.dist_at(i)), group.word_length(g), "{text} {g}");
                assert_eq!(ball.geodesic(g).unwrap(), group.geodesic_word(g), "{text} {g}");
            }
        }
    }
}
