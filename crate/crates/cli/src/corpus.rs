//! Seeded corpus generation. The same spec always produces byte-identical
//! files: one sequential RNG stream feeds the drawing loop, and rejected
//! draws consume from the same stream, so the output depends only on the
//! spec fields.

use std::fs;
use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vasskit_core::gen::random_vass;
use vasskit_geometry::cycle_space;

pub struct GenSpec {
    pub out: PathBuf,
    pub count: usize,
    pub d: usize,
    pub states: usize,
    pub trans: usize,
    pub m: i64,
    pub require_gscc: Option<usize>,
    pub seed: u64,
}

/// Draws a fresh instance before giving up on the filter.
const MAX_ATTEMPTS_PER_INSTANCE: usize = 5_000;

pub fn generate(spec: &GenSpec) -> Result<Vec<(String, String)>, String> {
    if spec.states == 0 {
        return Err("need at least one state".to_string());
    }
    if spec.m < 0 {
        return Err("the effect norm is an absolute value".to_string());
    }
    fs::create_dir_all(&spec.out)
        .map_err(|e| format!("{}: {e}", spec.out.display()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut entries = Vec::with_capacity(spec.count);
    for i in 0..spec.count {
        let mut accepted = None;
        for _ in 0..MAX_ATTEMPTS_PER_INSTANCE {
            let name = format!("gen{}_{i}", spec.seed);
            let vass = random_vass(&mut rng, &name, spec.d, spec.states, spec.trans, spec.m);
            let space = cycle_space(&vass);
            if spec
                .require_gscc
                .is_none_or(|want| space.scc_rank() == want)
            {
                accepted = Some((vass, space));
                break;
            }
        }
        let Some((vass, space)) = accepted else {
            return Err(format!(
                "no instance with the requested profile in {MAX_ATTEMPTS_PER_INSTANCE} draws; \
                 relax the filter or change the size parameters"
            ));
        };
        let file = spec.out.join(format!("inst{i:03}.vass"));
        fs::write(&file, vass.to_string()).map_err(|e| format!("{}: {e}", file.display()))?;
        entries.push((
            format!("inst{i:03}"),
            format!(
                "d={} n={} M={} g={} g_scc={}",
                vass.dim,
                vass.states.len(),
                vass.max_norm(),
                space.rank,
                space.scc_rank()
            ),
        ));
    }
    Ok(entries)
}
