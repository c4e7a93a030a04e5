use crate::compile::{compile, CompiledGadget};
use crate::program::{CounterProgram, Instruction, MultiplicationTriple};
use crate::GadgetError;

/// Per-iteration growth factor of the stage amplifier's multiplication
/// loops.
pub const MULT_FACTOR: i64 = 16;

/// Growth factor of the historical single-triple amplifier.
pub const OLD_MULT_FACTOR: i64 = 256;

/// `[b, c, d]` counter names for the triple tagged `tag`.
pub(crate) fn triple_names(tag: &str) -> [String; 3] {
    [format!("{tag}_b"), format!("{tag}_c"), format!("{tag}_d")]
}

/// Counter wiring of one amplifier stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplifierIo {
    /// Declared `(b, c, d)` names of the first input triple.
    pub input1: [String; 3],
    /// Declared names of the second, identically loaded input triple.
    pub input2: [String; 3],
    /// Output triple `(b', c', d')`; what the next consumer receives.
    pub output: [String; 3],
    /// Mirror copy of the output, for a consumer that needs two identical
    /// triples.  `None` for the last stage.
    pub output_copy: Option<[String; 3]>,
    /// Scratch counters, one per multiplication phase.
    pub temps: [String; 2],
}

impl AmplifierIo {
    /// Conventional wiring for stage `k` of a tower: inputs `s<k>a`,
    /// `s<k>b`, mirrored outputs `s<k+1>a`, `s<k+1>b`.
    pub fn for_stage(stage: usize) -> Self {
        AmplifierIo {
            input1: triple_names(&format!("s{stage}a")),
            input2: triple_names(&format!("s{stage}b")),
            output: triple_names(&format!("s{}a", stage + 1)),
            output_copy: Some(triple_names(&format!("s{}b", stage + 1))),
            temps: [format!("t{stage}a"), format!("t{stage}b")],
        }
    }
}

/// The multiply-in-place block: drain `x` into `temp`, certify `x` empty,
/// refill `x` at `factor` units per withdrawal, certify `temp` empty.  Both
/// certificates are zero tests against `triple` (named by its bound
/// counter), so `x` and `temp` must be among that triple's guards.
pub fn mult_block(x: &str, temp: &str, factor: i64, triple: &str) -> Vec<Instruction> {
    vec![
        Instruction::Loop(vec![
            Instruction::Add(x.to_string(), -1),
            Instruction::Add(temp.to_string(), 1),
        ]),
        Instruction::ZeroTest {
            counter: x.to_string(),
            triple: triple.to_string(),
        },
        Instruction::Loop(vec![
            Instruction::Add(x.to_string(), factor),
            Instruction::Add(temp.to_string(), -1),
        ]),
        Instruction::ZeroTest {
            counter: temp.to_string(),
            triple: triple.to_string(),
        },
    ]
}

/// Build the two-triple amplifier stage.
///
/// Both inputs are expected to hold the same load `(B, C, B * C)`; the
/// triples are used with bound and budget swapped, so the bound that caps
/// the stage's working counters is `C` and the budget pays for `B / 2`
/// tests.  An honest pass pumps the output pair `(c', d')` up to some `P`,
/// runs `B / 4` multiplication iterations on `b'` (certified by the first
/// input) and on `d'` (certified by the second), and drains what is left of
/// the bound counters.  Draining the sensors to zero then forces
/// `b' = 2^B` and `d' = 2^B * P` exactly, so the output triple holds
/// `(2^B, P, 2^B * P)` — one exponentiation per stage.
///
/// Each multiplication phase works on three counters tied by one
/// conservation law, plus its budget and sensor, so the cycles of its
/// strongly connected component span exactly four directions; nothing else
/// in the stage exceeds one.
pub fn make_amplifier(stage: usize, io: &AmplifierIo) -> Result<CounterProgram, GadgetError> {
    let mut counters: Vec<String> = Vec::new();
    counters.extend(io.input1.iter().cloned());
    counters.extend(io.input2.iter().cloned());
    counters.extend(io.output.iter().cloned());
    if let Some(copy) = &io.output_copy {
        counters.extend(copy.iter().cloned());
    }
    counters.extend(io.temps.iter().cloned());
    for (i, c) in counters.iter().enumerate() {
        if counters[..i].contains(c) {
            return Err(GadgetError::NameCollision(c.clone()));
        }
    }

    let [b1, c1, d1] = &io.input1;
    let [b2, c2, d2] = &io.input2;
    let [bo, co, sd] = &io.output;
    let [t1, t2] = &io.temps;

    let triples = vec![
        // Bound and budget swapped: `c` of the input plays the bound role.
        MultiplicationTriple {
            b: c1.clone(),
            c: b1.clone(),
            d: d1.clone(),
            guards: vec![bo.clone(), t1.clone()],
            intended: None,
        },
        MultiplicationTriple {
            b: c2.clone(),
            c: b2.clone(),
            d: d2.clone(),
            guards: vec![sd.clone(), t2.clone()],
            intended: None,
        },
    ];

    let pairs = match &io.output_copy {
        Some(copy) => io
            .output
            .iter()
            .zip(copy.iter())
            .map(|(o, c)| (o.clone(), c.clone()))
            .collect(),
        None => Vec::new(),
    };

    let body = vec![
        Instruction::Add(bo.clone(), 1),
        // Pump the output budget and sensor together.  The guarded add goes
        // first so its compensation gates the whole iteration.
        Instruction::Loop(vec![
            Instruction::Add(sd.clone(), 1),
            Instruction::Add(co.clone(), 1),
        ]),
        Instruction::Loop(mult_block(bo, t1, MULT_FACTOR, c1)),
        Instruction::Loop(vec![Instruction::Add(c1.clone(), -1)]),
        Instruction::Loop(mult_block(sd, t2, MULT_FACTOR, c2)),
        Instruction::Loop(vec![Instruction::Add(c2.clone(), -1)]),
    ];

    let program = CounterProgram {
        name: format!("ampl{stage}"),
        counters,
        triples,
        pairs,
        body,
    };
    program.validate()?;
    Ok(program)
}

/// [`make_amplifier`] compiled, with its dimension promise attached.
pub fn compile_stage(stage: usize, io: &AmplifierIo) -> Result<CompiledGadget, GadgetError> {
    let program = make_amplifier(stage, io)?;
    let mut gadget = compile(&program)?;
    gadget.promised_dimension = Some(4);
    Ok(gadget)
}

/// Counter wiring of the historical single-triple amplifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OldAmplifierIo {
    /// Declared `(b, c, d)` names of the single input triple.
    pub input: [String; 3],
    pub output: [String; 3],
    /// Shared scratch counter for both multiplication phases.
    pub temp: String,
}

impl OldAmplifierIo {
    pub fn conventional() -> Self {
        OldAmplifierIo {
            input: triple_names("in"),
            output: triple_names("out"),
            temp: "t".to_string(),
        }
    }
}

/// Build the single-triple amplifier this toolkit keeps as a negative
/// control.
///
/// One triple guards both working output counters and the shared scratch,
/// and a single big loop interleaves the two multiplication phases.  That
/// ties `b'`, `d'`, the scratch, and the bound into one conservation law
/// inside one strongly connected component, whose cycles therefore span
/// five directions instead of the stage amplifier's four — the reason the
/// two-triple version with per-phase scratch counters replaced it.
pub fn make_old_amplifier(io: &OldAmplifierIo) -> Result<CounterProgram, GadgetError> {
    let mut counters: Vec<String> = Vec::new();
    counters.extend(io.input.iter().cloned());
    counters.extend(io.output.iter().cloned());
    counters.push(io.temp.clone());
    for (i, c) in counters.iter().enumerate() {
        if counters[..i].contains(c) {
            return Err(GadgetError::NameCollision(c.clone()));
        }
    }

    let [b, c, d] = &io.input;
    let [bo, co, sd] = &io.output;
    let t = &io.temp;

    let triples = vec![MultiplicationTriple {
        b: c.clone(),
        c: b.clone(),
        d: d.clone(),
        guards: vec![bo.clone(), sd.clone(), t.clone()],
        intended: None,
    }];

    let mut big_loop = mult_block(bo, t, OLD_MULT_FACTOR, c);
    big_loop.extend(mult_block(sd, t, OLD_MULT_FACTOR, c));

    let body = vec![
        Instruction::Add(bo.clone(), 1),
        Instruction::Loop(vec![
            Instruction::Add(sd.clone(), 1),
            Instruction::Add(co.clone(), 1),
        ]),
        Instruction::Loop(big_loop),
        Instruction::Loop(vec![Instruction::Add(c.clone(), -1)]),
    ];

    let program = CounterProgram {
        name: "oldampl".to_string(),
        counters,
        triples,
        pairs: Vec::new(),
        body,
    };
    program.validate()?;
    Ok(program)
}

/// [`make_old_amplifier`] compiled, with its dimension promise attached.
pub fn compile_old_amplifier(io: &OldAmplifierIo) -> Result<CompiledGadget, GadgetError> {
    let program = make_old_amplifier(io)?;
    let mut gadget = compile(&program)?;
    gadget.promised_dimension = Some(5);
    Ok(gadget)
}
