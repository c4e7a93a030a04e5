use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use vasskit_core::{Configuration, StateId, Vass};

/// A counter value in a Karp–Miller label: a nonnegative integer or ω.
/// ω dominates every integer in the component order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OmegaValue {
    Finite(BigInt),
    Omega,
}

impl PartialOrd for OmegaValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OmegaValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (OmegaValue::Omega, OmegaValue::Omega) => Ordering::Equal,
            (OmegaValue::Omega, OmegaValue::Finite(_)) => Ordering::Greater,
            (OmegaValue::Finite(_), OmegaValue::Omega) => Ordering::Less,
            (OmegaValue::Finite(a), OmegaValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for OmegaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaValue::Finite(v) => write!(f, "{v}"),
            OmegaValue::Omega => write!(f, "w"),
        }
    }
}

/// A configuration whose counters may be ω.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaConfiguration {
    pub state: StateId,
    pub values: Vec<OmegaValue>,
}

impl OmegaConfiguration {
    pub fn from_configuration(c: &Configuration) -> Self {
        OmegaConfiguration {
            state: c.state,
            values: c.values.iter().cloned().map(OmegaValue::Finite).collect(),
        }
    }

    /// Same state and componentwise ≥ with ω on top.
    pub fn covers(&self, other: &OmegaConfiguration) -> bool {
        self.state == other.state
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a >= b)
    }

    pub fn is_all_omega(&self) -> bool {
        self.values.iter().all(|v| *v == OmegaValue::Omega)
    }

    pub fn omega_at(&self, counter: usize) -> bool {
        self.values[counter] == OmegaValue::Omega
    }

    /// Fire a transition effect; `None` when a finite counter would go
    /// negative. ω absorbs any effect.
    fn apply(&self, effect: &[BigInt], dst: StateId) -> Option<OmegaConfiguration> {
        let mut values = Vec::with_capacity(self.values.len());
        for (v, e) in self.values.iter().zip(effect) {
            match v {
                OmegaValue::Omega => values.push(OmegaValue::Omega),
                OmegaValue::Finite(x) => {
                    let next = x + e;
                    if next.is_negative() {
                        return None;
                    }
                    values.push(OmegaValue::Finite(next));
                }
            }
        }
        Some(OmegaConfiguration { state: dst, values })
    }
}

impl fmt::Display for OmegaConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}(", self.state)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone)]
pub struct KmNode {
    pub config: OmegaConfiguration,
    /// Index of the parent node; `None` for the root.
    pub parent: Option<usize>,
    /// Transition fired from the parent; `None` for the root.
    pub transition: Option<usize>,
}

/// The Karp–Miller tree rooted at a start configuration.
///
/// Queries answer `Some` only when the construction justifies it: an ω
/// witnesses unboundedness even in a truncated tree, but "bounded" needs
/// the complete tree. A truncated tree is never silently wrong.
#[derive(Debug, Clone)]
pub struct KarpMillerTree {
    pub nodes: Vec<KmNode>,
    /// True when the node budget stopped construction early.
    pub truncated: bool,
}

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

impl KarpMillerTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn has_omega(&self) -> bool {
        self.nodes
            .iter()
            .any(|n| n.config.values.contains(&OmegaValue::Omega))
    }

    /// Is the reachable set finite?
    pub fn bounded(&self) -> Option<bool> {
        if self.has_omega() {
            Some(false)
        } else if self.truncated {
            None
        } else {
            Some(true)
        }
    }

    /// Is counter `i` bounded over the reachable set?
    pub fn counter_bounded(&self, i: usize) -> Option<bool> {
        if self.nodes.iter().any(|n| n.config.omega_at(i)) {
            Some(false)
        } else if self.truncated {
            None
        } else {
            Some(true)
        }
    }

    /// Can every counter be made simultaneously large at `state`?
    pub fn simultaneous_omega(&self, state: StateId) -> Option<bool> {
        if self
            .nodes
            .iter()
            .any(|n| n.config.state == state && n.config.is_all_omega())
        {
            Some(true)
        } else if self.truncated {
            None
        } else {
            Some(false)
        }
    }

    /// One line per node: `index parent state counters...`, parent `-` for
    /// the root and `w` for ω.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, n) in self.nodes.iter().enumerate() {
            out.push_str(&i.to_string());
            match n.parent {
                Some(p) => {
                    out.push(' ');
                    out.push_str(&p.to_string());
                }
                None => out.push_str(" -"),
            }
            out.push(' ');
            out.push_str(&n.config.state.to_string());
            for v in &n.config.values {
                out.push(' ');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

pub fn karp_miller(vass: &Vass, start: &Configuration) -> KarpMillerTree {
    karp_miller_budgeted(vass, start, DEFAULT_NODE_BUDGET)
}

/// Classical construction: breadth-first in transition declaration order,
/// accelerating each fresh label against its ancestors (strictly increased
/// components become ω), stopping a branch when a label repeats an
/// ancestor exactly.
pub fn karp_miller_budgeted(
    vass: &Vass,
    start: &Configuration,
    node_budget: usize,
) -> KarpMillerTree {
    let mut tree = KarpMillerTree {
        nodes: Vec::new(),
        truncated: false,
    };
    if node_budget == 0 {
        tree.truncated = true;
        return tree;
    }
    tree.nodes.push(KmNode {
        config: OmegaConfiguration::from_configuration(start),
        parent: None,
        transition: None,
    });
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let state = tree.nodes[idx].config.state;
        for t in vass.outgoing(state) {
            let tr = &vass.transitions[t];
            let Some(mut succ) = tree.nodes[idx].config.apply(&tr.effect, tr.dst) else {
                continue;
            };
            // Accelerate until no ancestor is strictly below; a flip to ω
            // can unlock another ancestor, hence the outer fixpoint.
            loop {
                let mut changed = false;
                let mut at = Some(idx);
                while let Some(a) = at {
                    let anc = &tree.nodes[a].config;
                    if succ.covers(anc) && succ.values != anc.values {
                        for (sv, av) in succ.values.iter_mut().zip(&anc.values) {
                            if *sv != OmegaValue::Omega && av < sv {
                                *sv = OmegaValue::Omega;
                                changed = true;
                            }
                        }
                    }
                    at = tree.nodes[a].parent;
                }
                if !changed {
                    break;
                }
            }
            let mut repeats_ancestor = false;
            let mut at = Some(idx);
            while let Some(a) = at {
                if tree.nodes[a].config == succ {
                    repeats_ancestor = true;
                    break;
                }
                at = tree.nodes[a].parent;
            }
            if tree.nodes.len() == node_budget {
                tree.truncated = true;
                return tree;
            }
            tree.nodes.push(KmNode {
                config: succ,
                parent: Some(idx),
                transition: Some(t),
            });
            if !repeats_ancestor {
                queue.push_back(tree.nodes.len() - 1);
            }
        }
    }
    tree
}
