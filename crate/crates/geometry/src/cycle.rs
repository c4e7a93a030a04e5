use num_bigint::BigInt;
use num_traits::Zero;

use vasskit_core::{scc_decompose, StateId, Vass};

use crate::clean::{clean_basis, CleanBasis};
use crate::matrix::int_rank;

/// One spanning vector of a cycle space, together with two explicit cycles
/// through the SCC base state whose effect difference equals it.
///
/// The generator for an intra-SCC transition `t = (p, a, p′)` is
/// `r_p + a − r_{p′}`, where `r_s` is the effect of the breadth-first tree
/// path from the base to `s`. That vector is usually not itself a cycle
/// effect, but `eff(cycle) − eff(tree_cycle)` reproduces it exactly, and
/// differences of cycle effects stay inside the cycle space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedGenerator {
    pub effect: Vec<BigInt>,
    /// The transition this generator was derived from.
    pub transition: usize,
    /// Base → p, then `t`, then back from p′ to the base.
    pub cycle: Vec<usize>,
    /// Base → p′ along the tree, then the same way back.
    pub tree_cycle: Vec<usize>,
}

/// Cycle-space generators of a system, per SCC and globally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSpace {
    pub dim: usize,
    /// Generators grouped by SCC, components in topological order.
    pub per_scc: Vec<Vec<CertifiedGenerator>>,
    pub per_scc_rank: Vec<usize>,
    /// Global rank g.
    pub rank: usize,
    /// Canonical clean basis of the global span.
    pub basis: CleanBasis,
}

impl CycleSpace {
    pub fn global_generators(&self) -> Vec<Vec<BigInt>> {
        self.per_scc
            .iter()
            .flatten()
            .map(|g| g.effect.clone())
            .collect()
    }

    /// Maximum per-SCC rank, i.e. g_scc.
    pub fn scc_rank(&self) -> usize {
        self.per_scc_rank.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first tree paths from `base` inside one SCC, following the given
/// transition indices in declaration order. Returns, per state, the list of
/// tree transitions from `base` (None for states outside the SCC).
fn bfs_tree_paths(
    vass: &Vass,
    members: &[StateId],
    intra: &[usize],
    base: StateId,
    reversed: bool,
) -> Vec<Option<Vec<usize>>> {
    let mut path: Vec<Option<Vec<usize>>> = vec![None; vass.states.len()];
    path[base] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(base);
    while let Some(s) = queue.pop_front() {
        for &t in intra {
            let tr = &vass.transitions[t];
            let (from, to) = if reversed {
                (tr.dst, tr.src)
            } else {
                (tr.src, tr.dst)
            };
            if from == s && path[to].is_none() {
                let mut p = path[s].clone().unwrap();
                p.push(t);
                path[to] = Some(p);
                queue.push_back(to);
            }
        }
    }
    debug_assert!(members.iter().all(|&m| path[m].is_some()));
    path
}

fn effect_of(vass: &Vass, steps: &[usize]) -> Vec<BigInt> {
    let mut eff = vec![BigInt::zero(); vass.dim];
    for &t in steps {
        for (e, a) in eff.iter_mut().zip(&vass.transitions[t].effect) {
            *e += a;
        }
    }
    eff
}

/// Computes the cycle space: per-SCC generators with certifying cycles,
/// per-SCC ranks, the global rank g, and a canonical clean basis.
pub fn cycle_space(vass: &Vass) -> CycleSpace {
    let scc = scc_decompose(vass);
    let mut per_scc = Vec::with_capacity(scc.components.len());
    let mut per_scc_rank = Vec::with_capacity(scc.components.len());

    for (ci, members) in scc.components.iter().enumerate() {
        let intra: Vec<usize> = (0..vass.transitions.len())
            .filter(|&t| {
                let tr = &vass.transitions[t];
                scc.component_of[tr.src] == ci && scc.component_of[tr.dst] == ci
            })
            .collect();
        // Base state: lowest index in the component.
        let base = members[0];
        let fwd = bfs_tree_paths(vass, members, &intra, base, false);
        let back = bfs_tree_paths(vass, members, &intra, base, true);

        let mut gens = Vec::new();
        for &t in &intra {
            let tr = &vass.transitions[t];
            let to_p = fwd[tr.src].as_ref().expect("SCC member reachable");
            let to_p2 = fwd[tr.dst].as_ref().expect("SCC member reachable");
            // `back` paths are stored as forward-oriented transition
            // sequences leading from the state back to the base.
            let ret: Vec<usize> = back[tr.dst]
                .as_ref()
                .expect("SCC member co-reachable")
                .iter()
                .rev()
                .copied()
                .collect();
            let r_p = effect_of(vass, to_p);
            let r_p2 = effect_of(vass, to_p2);
            let effect: Vec<BigInt> = r_p
                .iter()
                .zip(&r_p2)
                .zip(&tr.effect)
                .map(|((a, b), e)| a + e - b)
                .collect();
            let mut cycle = to_p.clone();
            cycle.push(t);
            cycle.extend(&ret);
            let mut tree_cycle = to_p2.clone();
            tree_cycle.extend(&ret);
            gens.push(CertifiedGenerator {
                effect,
                transition: t,
                cycle,
                tree_cycle,
            });
        }
        let effects: Vec<Vec<BigInt>> = gens.iter().map(|g| g.effect.clone()).collect();
        per_scc_rank.push(int_rank(&effects, vass.dim));
        per_scc.push(gens);
    }

    let global: Vec<Vec<BigInt>> = per_scc
        .iter()
        .flatten()
        .map(|g| g.effect.clone())
        .collect();
    let basis = clean_basis(&global, vass.dim);
    let rank = basis.rank();

    debug_assert!(rank <= vass.dim);
    debug_assert!(rank <= per_scc_rank.iter().sum::<usize>());
    debug_assert!(
        rank <= vass.states.len() * per_scc_rank.iter().copied().max().unwrap_or(0)
            || rank == 0
    );

    CycleSpace {
        dim: vass.dim,
        per_scc,
        per_scc_rank,
        rank,
        basis,
    }
}

/// The geometric dimension g: rank of the space spanned by all cycle
/// effects.
pub fn geometric_dimension(vass: &Vass) -> usize {
    cycle_space(vass).rank
}

/// The SCC dimension g_scc: maximum cycle-space rank of a single strongly
/// connected component.
pub fn scc_dimension(vass: &Vass) -> usize {
    cycle_space(vass).scc_rank()
}
