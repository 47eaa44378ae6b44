use std::collections::{HashSet, VecDeque};

use super::CayleyError;
use crate::group::{Element, MarkedGroup};

/// Default number of windows tried before giving up.
const WINDOWS: u64 = 4;

/// Checks whether `subset` generates every element of `B(e, r_test)`.
///
/// For `r_test >= 1` the ball contains Σ, and Σ generates the group, so it
/// suffices to express each generator as a product of subset elements. The
/// search runs a BFS over subset products confined to the window
/// `|g| <= 1 + j·L` (`L` the longest subset element) for `j = 1..=4`.
/// A `true` answer is always backed by explicit products. `false` is
/// returned when widening the window no longer reaches new generators.
/// Exceeding `cap` visited elements is reported as
/// [`CayleyError::CapExceeded`], which is inconclusive.
pub fn generates_within(
    group: &MarkedGroup,
    subset: &[Element],
    r_test: u32,
    cap: usize,
) -> Result<bool, CayleyError> {
    let set: HashSet<&Element> = subset.iter().collect();
    for s in subset {
        if !set.contains(&group.inverse(s)) {
            return Err(CayleyError::NotSymmetric(format!("inverse of {s} is missing")));
        }
    }
    if r_test == 0 {
        return Ok(true);
    }
    let targets: Vec<&Element> = group.generators().iter().map(|g| &g.element).collect();
    let longest = subset.iter().map(|s| group.word_length(s)).max().unwrap_or(0);
    if longest == 0 {
        return Ok(false);
    }

    let mut previous_hits = usize::MAX;
    let mut visited = 0;
    for j in 1..=WINDOWS {
        let window = 1 + j * longest;
        let mut seen: HashSet<Element> = HashSet::new();
        let mut queue = VecDeque::new();
        let e = group.identity();
        seen.insert(e.clone());
        queue.push_back(e);
        while let Some(g) = queue.pop_front() {
            for s in subset {
                let h = group.multiply(&g, s);
                if group.word_length(&h) > window || seen.contains(&h) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(CayleyError::CapExceeded { visited: seen.len() });
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
        visited = seen.len();
        let hits = targets.iter().filter(|t| seen.contains(**t)).count();
        if hits == targets.len() {
            return Ok(true);
        }
        if hits == previous_hits {
            return Ok(false);
        }
        previous_hits = hits;
    }
    Err(CayleyError::CapExceeded { visited })
}
