//! Shortest Z-runs by plain breadth-first search.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;

use vasskit_core::{step_z, Run, Semantics, Vass, ZConfiguration};
use vasskit_geometry::geometric_dimension;
use vasskit_search::zrun_length_bound;

use crate::{validate_z, ZReachError, ZRun};

/// Exact shortest Z-run from `s` to `t` of length at most `cap`, ties
/// broken toward the lexicographically least step sequence. Exact
/// deduplication is sound here because all runs through equal
/// configurations continue identically. `None` only rules out runs within
/// the cap; Z-reachability itself is [`crate::decide_zreach`]'s job.
pub fn shortest_zrun(
    vass: &Vass,
    s: &ZConfiguration,
    t: &ZConfiguration,
    cap: usize,
    budget: u64,
) -> Result<Option<ZRun>, ZReachError> {
    validate_z(vass, s)?;
    validate_z(vass, t)?;
    let empty_run = |steps: &[usize]| {
        Run::replay(vass, s, steps, Semantics::Integer).expect("searched steps replay")
    };
    if s == t {
        return Ok(Some(empty_run(&[])));
    }

    // (configuration, parent node + transition taken, depth)
    type SearchNode = (ZConfiguration, Option<(usize, usize)>, usize);
    let mut nodes: Vec<SearchNode> = vec![(s.clone(), None, 0)];
    let mut seen: HashSet<ZConfiguration> = HashSet::from([s.clone()]);
    let mut queue = VecDeque::from([0usize]);
    let mut expanded: u64 = 0;
    while let Some(at) = queue.pop_front() {
        if expanded == budget {
            return Err(ZReachError::BudgetExceeded { budget });
        }
        expanded += 1;
        let depth = nodes[at].2;
        if depth == cap {
            continue;
        }
        for ti in vass.outgoing(nodes[at].0.state) {
            let next = step_z(vass, &nodes[at].0, ti).expect("integer steps always fire");
            if !seen.insert(next.clone()) {
                continue;
            }
            let hit = next == *t;
            nodes.push((next, Some((at, ti)), depth + 1));
            if hit {
                let mut steps = Vec::new();
                let mut cursor = nodes.len() - 1;
                while let Some((parent, step)) = nodes[cursor].1 {
                    steps.push(step);
                    cursor = parent;
                }
                steps.reverse();
                return Ok(Some(empty_run(&steps)));
            }
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(None)
}

/// The growth base of the short-run guarantee: the larger of the system
/// size and the two endpoint norms.
pub fn run_length_base(vass: &Vass, s: &ZConfiguration, t: &ZConfiguration) -> BigInt {
    vass.size().max(s.max_norm()).max(t.max_norm())
}

/// Does `length` stay within `ceiling` times `base^(6g+1)`? The theory
/// promises short runs up to an unspecified constant factor; the ceiling
/// makes that factor an explicit, testable knob.
pub fn within_ratio(
    vass: &Vass,
    s: &ZConfiguration,
    t: &ZConfiguration,
    length: usize,
    ceiling: u32,
) -> bool {
    let base = run_length_base(vass, s, t);
    let bound = zrun_length_bound(&base, geometric_dimension(vass));
    BigInt::from(length) <= bound * ceiling
}
