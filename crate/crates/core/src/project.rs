use crate::error::SemanticsError;
use crate::model::{Transition, Vass};

/// Restricts every effect vector to the coordinates in `keep` (ascending,
/// deduplicated). The state set and transition skeleton are unchanged, so
/// transition indices remain valid. An empty `keep` yields a dim-0 system.
pub fn project_counters(vass: &Vass, keep: &[usize]) -> Result<Vass, SemanticsError> {
    let mut coords: Vec<usize> = keep.to_vec();
    coords.sort_unstable();
    coords.dedup();
    if let Some(&bad) = coords.iter().find(|&&c| c >= vass.dim) {
        return Err(SemanticsError::NoSuchCounter {
            counter: bad,
            dim: vass.dim,
        });
    }
    let transitions = vass
        .transitions
        .iter()
        .map(|t| Transition {
            src: t.src,
            dst: t.dst,
            effect: coords.iter().map(|&c| t.effect[c].clone()).collect(),
        })
        .collect();
    Ok(Vass {
        name: vass.name.clone(),
        dim: coords.len(),
        states: vass.states.clone(),
        transitions,
    })
}
