use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Signed;

use vasskit_core::{Configuration, Vass};

/// Exhaustive reachability inside a value box: every configuration whose
/// counters all stay ≤ `box_ceiling`, discovered up to `depth_cap` steps.
#[derive(Debug, Clone)]
pub struct BfsReach {
    /// Shortest run length (within the box) per reached configuration.
    pub dist: HashMap<Configuration, usize>,
    /// Configurations in discovery order.
    pub order: Vec<Configuration>,
    /// True when some successor was discarded for leaving the box or the
    /// depth cap cut the frontier; the reported set is then only a subset
    /// of the true reachable set.
    pub truncated: bool,
}

impl BfsReach {
    /// Shortest distance to any configuration covering `target`.
    pub fn covering_distance(&self, target: &Configuration) -> Option<usize> {
        self.order
            .iter()
            .filter(|c| c.covers(target))
            .map(|c| self.dist[c])
            .min()
    }

    pub fn contains(&self, c: &Configuration) -> bool {
        self.dist.contains_key(c)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Plain breadth-first search in declaration order; no pruning of any kind
/// beyond the box and the depth cap.
pub fn bfs_reach(
    vass: &Vass,
    start: &Configuration,
    box_ceiling: &BigInt,
    depth_cap: usize,
) -> BfsReach {
    let mut out = BfsReach {
        dist: HashMap::new(),
        order: Vec::new(),
        truncated: false,
    };
    if start.values.iter().any(|v| v > box_ceiling) {
        out.truncated = true;
        return out;
    }
    let mut queue = VecDeque::new();
    out.dist.insert(start.clone(), 0);
    out.order.push(start.clone());
    queue.push_back(start.clone());
    while let Some(c) = queue.pop_front() {
        let depth = out.dist[&c];
        if depth == depth_cap {
            // Unexpanded frontier: deeper configurations may be missing.
            out.truncated = true;
            continue;
        }
        for t in vass.outgoing(c.state) {
            let tr = &vass.transitions[t];
            let mut values = Vec::with_capacity(vass.dim);
            let mut ok = true;
            for (v, e) in c.values.iter().zip(&tr.effect) {
                let next = v + e;
                if next.is_negative() {
                    ok = false;
                    break;
                }
                if &next > box_ceiling {
                    ok = false;
                    out.truncated = true;
                    break;
                }
                values.push(next);
            }
            if !ok {
                continue;
            }
            let succ = Configuration {
                state: tr.dst,
                values,
            };
            if !out.dist.contains_key(&succ) {
                out.dist.insert(succ.clone(), depth + 1);
                out.order.push(succ.clone());
                queue.push_back(succ);
            }
        }
    }
    out
}
