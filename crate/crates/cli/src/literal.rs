//! Configuration literals: `state:v1,v2,...` with signed decimal values.

use num_bigint::BigInt;
use vasskit_core::{Configuration, Vass, ZConfiguration};

pub fn integer(vass: &Vass, lit: &str) -> Result<ZConfiguration, String> {
    let (state_name, rest) = lit
        .split_once(':')
        .ok_or_else(|| format!("bad configuration literal `{lit}`: expected state:v1,v2,..."))?;
    let state = vass
        .state_index(state_name)
        .ok_or_else(|| format!("unknown state `{state_name}`"))?;
    let values: Vec<BigInt> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|p| {
                p.trim()
                    .parse::<BigInt>()
                    .map_err(|e| format!("bad counter value `{p}`: {e}"))
            })
            .collect::<Result<_, _>>()?
    };
    if values.len() != vass.dim {
        return Err(format!(
            "literal `{lit}` has {} values, the system has {} counters",
            values.len(),
            vass.dim
        ));
    }
    Ok(ZConfiguration { state, values })
}

pub fn nonneg(vass: &Vass, lit: &str) -> Result<Configuration, String> {
    let z = integer(vass, lit)?;
    z.to_nat()
        .map_err(|_| format!("`{lit}` has a negative value; this subcommand keeps counters nonnegative"))
}
