use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use vasskit_core::Configuration;
use vasskit_geometry::scc_dimension;

use crate::amplifier::{make_amplifier, triple_names, AmplifierIo};
use crate::compile::{compile_with_universe, CompiledGadget, WalkItem, ZeroTestSite};
use crate::program::{CounterProgram, Instruction, MultiplicationTriple};
use crate::GadgetError;

/// Tallest tower the builder accepts; taller instances blow past any budget
/// a desk-scale check could spend.
pub const MAX_TOWER_HEIGHT: usize = 2;

/// A machine block that accepts immediately: it declares the triple it
/// receives and two guarded work counters, but performs no steps.  Useful
/// as the machine argument when only the carrier's geometry is under test.
pub fn trivial_machine() -> CounterProgram {
    CounterProgram {
        name: "machine".to_string(),
        counters: ["x", "y", "mb", "mc", "md"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        triples: vec![MultiplicationTriple {
            b: "mb".to_string(),
            c: "mc".to_string(),
            d: "md".to_string(),
            guards: vec!["x".to_string(), "y".to_string()],
            intended: None,
        }],
        pairs: Vec::new(),
        body: Vec::new(),
    }
}

/// An assembled tower carrier.
#[derive(Debug, Clone)]
pub struct TowerInstance {
    pub gadget: CompiledGadget,
    pub height: usize,
    pub seed: u64,
    /// Bound the machine's triple holds on honest runs: `seed` pushed
    /// through `height` exponentiations.
    pub machine_bound: BigInt,
}

/// Assemble seed, `n` amplifier stages, the machine block, and the closing
/// drains into one VASS.
///
/// The seed block loads two identical triples `(seed_b, C, seed_b * C)` for
/// a freely pumped `C`; each stage exponentiates the bound and hands a
/// mirrored pair of output triples to the next; the final stage feeds the
/// machine's declared triple directly.  After the machine, every counter
/// except the sensors is drained, so the default target — exit point, all
/// counters zero — accepts exactly the runs in which every sensor was paid
/// off honestly, and on those the machine block saw its triple loaded with
/// a bound of height-`n` tower size.
///
/// The machine must declare exactly one triple and no mirror pairs.  Mirror
/// audits happen per stage before assembly, so the assembled instance
/// carries no mirror metadata of its own.
pub fn build_tower_instance(
    n: usize,
    seed_b: u64,
    machine: &CounterProgram,
) -> Result<TowerInstance, GadgetError> {
    if n == 0 || n > MAX_TOWER_HEIGHT {
        return Err(GadgetError::TowerHeight { n });
    }
    if seed_b == 0 || seed_b > 16 {
        return Err(GadgetError::SeedRange(seed_b));
    }
    machine.validate()?;
    if machine.triples.len() != 1 {
        return Err(GadgetError::MachineShape(
            "must declare exactly one multiplication triple",
        ));
    }
    if !machine.pairs.is_empty() {
        return Err(GadgetError::MachineShape("must not declare mirror pairs"));
    }
    let machine_triple = [
        machine.triples[0].b.clone(),
        machine.triples[0].c.clone(),
        machine.triples[0].d.clone(),
    ];

    // Stage wiring: stage k consumes the pair s<k>a / s<k>b and produces
    // the next pair, except the last stage, which writes the machine's
    // triple with no copy.
    let mut stages = Vec::new();
    for k in 1..=n {
        let mut io = AmplifierIo::for_stage(k);
        if k == n {
            io.output = machine_triple.clone();
            io.output_copy = None;
        }
        stages.push((io.clone(), make_amplifier(k, &io)?));
    }

    let mut universe: Vec<String> = Vec::new();
    universe.extend(triple_names("s1a"));
    universe.extend(triple_names("s1b"));
    for (io, _) in &stages {
        universe.extend(io.temps.iter().cloned());
        universe.extend(io.output.iter().cloned());
        if let Some(copy) = &io.output_copy {
            universe.extend(copy.iter().cloned());
        }
    }
    for c in machine.counters.iter() {
        if !machine_triple.contains(c) {
            universe.push(c.clone());
        }
    }
    let mut seen = HashSet::new();
    for c in &universe {
        if !seen.insert(c.as_str()) {
            return Err(GadgetError::NameCollision(c.clone()));
        }
    }

    let seed = seed_program(seed_b);
    let mut sensor_names: HashSet<String> = HashSet::new();
    for (_, program) in &stages {
        for t in &program.triples {
            sensor_names.insert(t.d.clone());
        }
    }
    sensor_names.insert(machine.triples[0].d.clone());

    let drains: Vec<String> = universe
        .iter()
        .filter(|c| !sensor_names.contains(*c))
        .cloned()
        .collect();
    let epilogue = CounterProgram {
        name: "drain".to_string(),
        counters: drains.clone(),
        triples: Vec::new(),
        pairs: Vec::new(),
        body: drains
            .iter()
            .map(|c| Instruction::Loop(vec![Instruction::Add(c.clone(), -1)]))
            .collect(),
    };

    let reserved: Vec<&str> = std::iter::once("seed")
        .chain(stages.iter().map(|(_, p)| p.name.as_str()))
        .chain(std::iter::once("drain"))
        .collect();
    if reserved.contains(&machine.name.as_str()) {
        return Err(GadgetError::NameCollision(machine.name.clone()));
    }

    let mut instance = compile_with_universe(&seed, &universe)?;
    for (_, program) in &stages {
        append(&mut instance, compile_with_universe(program, &universe)?)?;
    }
    let machine_block = compile_with_universe(machine, &universe)?;
    let machine_rank = scc_dimension(&machine_block.vass);
    append(&mut instance, machine_block)?;
    append(&mut instance, compile_with_universe(&epilogue, &universe)?)?;

    instance.mirrors = Vec::new();
    instance.target = Configuration::zeros(instance.exit, instance.vass.dim);
    instance.vass.name = format!("tower{n}");
    instance.promised_dimension = Some(4.max(machine_rank));

    let mut bound = BigInt::from(seed_b);
    for _ in 0..n {
        let exp = bound.to_u64().expect("bounded by the height and seed caps");
        bound = BigInt::one() << exp;
    }
    Ok(TowerInstance {
        gadget: instance,
        height: n,
        seed: seed_b,
        machine_bound: bound,
    })
}

/// The seed block: unrolled loads of both budget counters, then one pump
/// loop raising the two bounds and the two sensors in lockstep.
fn seed_program(seed_b: u64) -> CounterProgram {
    let [b1, c1, d1] = triple_names("s1a");
    let [b2, c2, d2] = triple_names("s1b");
    let mut body = Vec::new();
    for _ in 0..seed_b {
        body.push(Instruction::Add(b1.clone(), 1));
    }
    for _ in 0..seed_b {
        body.push(Instruction::Add(b2.clone(), 1));
    }
    body.push(Instruction::Loop(vec![
        Instruction::Add(c1.clone(), 1),
        Instruction::Add(d1.clone(), seed_b as i64),
        Instruction::Add(c2.clone(), 1),
        Instruction::Add(d2.clone(), seed_b as i64),
    ]));
    CounterProgram {
        name: "seed".to_string(),
        counters: vec![b1, c1, d1, b2, c2, d2],
        triples: Vec::new(),
        pairs: Vec::new(),
        body,
    }
}

/// Splice `block` onto the end of `dst`: append its states and transitions,
/// bridge the old exit to the block's entry, and shift all metadata.
fn append(dst: &mut CompiledGadget, block: CompiledGadget) -> Result<(), GadgetError> {
    assert_eq!(dst.vass.dim, block.vass.dim, "blocks share one universe");
    let state_off = dst.vass.states.len();
    for name in &block.vass.states {
        if dst.vass.state_index(name).is_some() {
            return Err(GadgetError::NameCollision(name.clone()));
        }
    }
    for name in block.vass.states {
        dst.vass.add_state(name);
    }

    let bridge_effect = vec![BigInt::zero(); dst.vass.dim];
    let bridge = dst
        .vass
        .add_transition(dst.exit, bridge_effect, block.entry + state_off);
    let trans_off = dst.vass.transitions.len();
    for tr in block.vass.transitions {
        dst.vass
            .add_transition(tr.src + state_off, tr.effect, tr.dst + state_off);
    }

    let triple_off = dst.triples.len();
    dst.triples.extend(block.triples);
    for s in block.sensors {
        if !dst.sensors.contains(&s) {
            dst.sensors.push(s);
        }
    }
    for site in block.zero_tests {
        dst.zero_tests.push(ZeroTestSite {
            states: site.states.iter().map(|s| s + state_off).collect(),
            exit: site.exit + state_off,
            settle: site.settle + trans_off,
            tested: site.tested,
            triple: site.triple + triple_off,
        });
    }

    dst.walk.push(WalkItem::Forward(bridge));
    let mut shifted = block.walk;
    offset_walk(&mut shifted, trans_off, state_off);
    dst.walk.extend(shifted);

    for (name, range) in block.regions {
        dst.regions
            .push((name, range.start + state_off..range.end + state_off));
    }
    dst.exit = block.exit + state_off;
    Ok(())
}

fn offset_walk(items: &mut [WalkItem], trans_off: usize, state_off: usize) {
    for item in items {
        match item {
            WalkItem::Forward(t) => *t += trans_off,
            WalkItem::Loop(spec) => {
                spec.head += state_off;
                offset_walk(&mut spec.body, trans_off, state_off);
            }
        }
    }
}
