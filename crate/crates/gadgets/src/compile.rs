use std::collections::HashMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::Zero;
use vasskit_core::{Configuration, StateId, Vass};

use crate::program::{CounterProgram, Instruction};
use crate::GadgetError;

/// A multiplication triple resolved to counter coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledTriple {
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub guards: Vec<usize>,
}

/// Where one zero test landed in the compiled VASS.
///
/// A test of `x` against a triple with `k` guards occupies `2 * k`
/// consecutive control points.  Each carries a single self-loop that moves
/// one unit along the transfer chain `x, other guards.., b` (first towards
/// `x`, then back towards `b`) while decrementing the sensor; zero-effect
/// bridges link consecutive points, and a final settling transition pays two
/// units of budget.  The sensor loses at most `2B - x0` per visit, where `B`
/// is the bound and `x0` the tested counter's value on entry, with equality
/// possible only when `x0 = 0` — which is what makes the drained sensor a
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroTestSite {
    /// Control points of the block, in program order; the first is the entry.
    pub states: Vec<StateId>,
    /// Control point reached after settling.
    pub exit: StateId,
    /// Index of the settling (budget `-= 2`) transition.
    pub settle: usize,
    /// Coordinate of the tested counter.
    pub tested: usize,
    /// Index into [`CompiledGadget::triples`].
    pub triple: usize,
}

/// Straight-line skeleton of a compiled program, used to script runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WalkItem {
    /// A transition taken exactly once per pass.
    Forward(usize),
    /// A loop whose iteration count a script chooses.
    Loop(LoopSpec),
}

/// A lowered loop: its anchor state and the walk of one full iteration,
/// which ends back at the anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSpec {
    pub head: StateId,
    pub body: Vec<WalkItem>,
}

/// A counter program lowered to a VASS, with enough metadata to script runs
/// and audit the structural invariants the constructions depend on.
#[derive(Debug, Clone)]
pub struct CompiledGadget {
    pub vass: Vass,
    /// Counter names in coordinate order (the compilation universe).
    pub counters: Vec<String>,
    pub triples: Vec<CompiledTriple>,
    /// Sensor coordinates, one per triple.
    pub sensors: Vec<usize>,
    pub zero_tests: Vec<ZeroTestSite>,
    /// Mirror pairs as coordinates `(original, copy)`.
    pub mirrors: Vec<(usize, usize)>,
    pub entry: StateId,
    pub exit: StateId,
    pub walk: Vec<WalkItem>,
    /// Named state ranges; a single range for a plain compilation, one per
    /// block for assembled instances.
    pub regions: Vec<(String, Range<usize>)>,
    /// Value of `scc_dimension` the construction promises, when it promises
    /// one.
    pub promised_dimension: Option<usize>,
    /// Default start: the entry point with all counters zero.
    pub source: Configuration,
    /// Default goal: the exit point with all counters zero.
    pub target: Configuration,
}

impl CompiledGadget {
    pub fn counter_index(&self, name: &str) -> Option<usize> {
        self.counters.iter().position(|c| c == name)
    }

    /// A configuration at `state` with the named counters loaded and all
    /// others zero.
    ///
    /// Panics on unknown names or negative loads; it is a test and
    /// construction convenience, not a parser.
    pub fn configuration(&self, state: StateId, loads: &[(&str, i64)]) -> Configuration {
        let mut values = vec![0i64; self.counters.len()];
        for (name, v) in loads {
            let i = self
                .counter_index(name)
                .unwrap_or_else(|| panic!("unknown counter {name:?}"));
            values[i] = *v;
        }
        Configuration::from_i64(state, &values)
    }

    /// Expand loop iteration counts into a transition sequence.
    ///
    /// Counts are consumed in execution order, one per loop *entry*: first
    /// the count for a loop itself, then, for each of its iterations anew,
    /// the counts for the loops inside its body.  Returns `None` when the
    /// script is too short or too long for the walk.
    pub fn scripted_run(&self, counts: &[u64]) -> Option<Vec<usize>> {
        fn emit(
            items: &[WalkItem],
            counts: &mut std::slice::Iter<'_, u64>,
            steps: &mut Vec<usize>,
        ) -> bool {
            for item in items {
                match item {
                    WalkItem::Forward(t) => steps.push(*t),
                    WalkItem::Loop(spec) => {
                        let Some(&n) = counts.next() else { return false };
                        for _ in 0..n {
                            if !emit(&spec.body, counts, steps) {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }

        let mut iter = counts.iter();
        let mut steps = Vec::new();
        if !emit(&self.walk, &mut iter, &mut steps) || iter.next().is_some() {
            return None;
        }
        Some(steps)
    }

    /// Check the conservation law every zero-test block relies on: inside a
    /// block, each transition leaves the sum of the owning triple's bound
    /// counter and guards unchanged.
    pub fn zero_test_invariants_ok(&self) -> bool {
        self.zero_tests.iter().all(|site| {
            let triple = &self.triples[site.triple];
            self.vass
                .transitions
                .iter()
                .filter(|tr| site.states.contains(&tr.src))
                .all(|tr| {
                    let mut sum = tr.effect[triple.b].clone();
                    for &g in &triple.guards {
                        sum += &tr.effect[g];
                    }
                    sum.is_zero()
                })
        })
    }

    /// Check that every mirror copy receives exactly the original's effect
    /// on every transition.
    pub fn mirrors_ok(&self) -> bool {
        self.mirrors.iter().all(|&(orig, copy)| {
            self.vass
                .transitions
                .iter()
                .all(|tr| tr.effect[orig] == tr.effect[copy])
        })
    }
}

/// Lower a validated counter program to a VASS over its own counters.
pub fn compile(program: &CounterProgram) -> Result<CompiledGadget, GadgetError> {
    compile_with_universe(program, &program.counters)
}

/// Lower a program against a larger coordinate universe, so that several
/// programs can be compiled into compatible VASS and stitched together.
/// Every counter the program declares must appear in `universe`.
///
/// Control points are created in program order and named `<name>_p<i>`.  A
/// loop reuses the current control point as its anchor when no cycle is
/// attached there yet; otherwise a zero-effect bridge moves to a fresh one.
/// Keeping at most one cycle per control point is what stops the loops of a
/// zero-test block from interleaving, so it is load-bearing, not cosmetic.
pub fn compile_with_universe(
    program: &CounterProgram,
    universe: &[String],
) -> Result<CompiledGadget, GadgetError> {
    program.validate()?;
    if program.name.is_empty() || program.name.split_whitespace().count() != 1 {
        return Err(GadgetError::Malformed {
            line: 0,
            msg: format!("program name {:?} is not a single word", program.name),
        });
    }
    let mut index = HashMap::new();
    for (i, name) in universe.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(GadgetError::DuplicateCounter(name.clone()));
        }
    }
    for c in &program.counters {
        if !index.contains_key(c) {
            return Err(GadgetError::UndeclaredCounter(c.clone()));
        }
    }

    let dim = universe.len();
    let mut compiler = Compiler {
        program,
        index,
        dim,
        vass: Vass::new(program.name.clone(), dim),
        current: 0,
        can_anchor: true,
        next_point: 0,
        zero_tests: Vec::new(),
    };
    compiler.current = compiler.fresh_point();
    let entry = compiler.current;
    let mut walk = Vec::new();
    for instr in &program.body {
        compiler.lower_instr(instr, &mut walk);
    }
    let exit = compiler.current;

    let Compiler {
        mut vass,
        index,
        zero_tests,
        ..
    } = compiler;

    let mirrors: Vec<(usize, usize)> = program
        .pairs
        .iter()
        .map(|(orig, copy)| (index[orig], index[copy]))
        .collect();
    // Copies are write-protected, so their columns are still zero here and
    // plain assignment mirrors the originals.
    for tr in &mut vass.transitions {
        for &(orig, copy) in &mirrors {
            tr.effect[copy] = tr.effect[orig].clone();
        }
    }

    let triples = program
        .triples
        .iter()
        .map(|t| CompiledTriple {
            b: index[&t.b],
            c: index[&t.c],
            d: index[&t.d],
            guards: t.guards.iter().map(|g| index[g]).collect(),
        })
        .collect();
    let sensors = program.triples.iter().map(|t| index[&t.d]).collect();

    let states = vass.states.len();
    Ok(CompiledGadget {
        source: Configuration::zeros(entry, dim),
        target: Configuration::zeros(exit, dim),
        counters: universe.to_vec(),
        vass,
        triples,
        sensors,
        zero_tests,
        mirrors,
        entry,
        exit,
        walk,
        regions: vec![(program.name.clone(), 0..states)],
        promised_dimension: None,
    })
}

struct Compiler<'p> {
    program: &'p CounterProgram,
    index: HashMap<String, usize>,
    dim: usize,
    vass: Vass,
    current: StateId,
    /// Whether `current` may still become a loop anchor (no cycle attached).
    can_anchor: bool,
    next_point: usize,
    zero_tests: Vec<ZeroTestSite>,
}

impl<'p> Compiler<'p> {
    fn coord(&self, name: &str) -> usize {
        self.index[name]
    }

    fn fresh_point(&mut self) -> StateId {
        let name = format!("{}_p{}", self.program.name, self.next_point);
        self.next_point += 1;
        self.vass.add_state(name)
    }

    fn zeros(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.dim]
    }

    /// The state the next cycle attaches to, bridging to a fresh one when
    /// the current point is already taken.
    fn anchor(&mut self, out: &mut Vec<WalkItem>) -> StateId {
        if !self.can_anchor {
            let next = self.fresh_point();
            let effect = self.zeros();
            let t = self.vass.add_transition(self.current, effect, next);
            out.push(WalkItem::Forward(t));
            self.current = next;
            self.can_anchor = true;
        }
        self.current
    }

    /// Effect of `name += k`, with the guarding triple's bound counter (if
    /// any) absorbing `-k` so the guard sum stays put.
    fn add_effect(&self, name: &str, k: i64) -> Vec<BigInt> {
        let mut e = self.zeros();
        e[self.coord(name)] += k;
        if let Some(ti) = self.program.triple_of_guard(name) {
            e[self.coord(&self.program.triples[ti].b)] -= k;
        }
        e
    }

    fn lower_instr(&mut self, instr: &'p Instruction, out: &mut Vec<WalkItem>) {
        match instr {
            Instruction::Add(x, k) => {
                let dst = self.fresh_point();
                let effect = self.add_effect(x, *k);
                let t = self.vass.add_transition(self.current, effect, dst);
                out.push(WalkItem::Forward(t));
                self.current = dst;
                self.can_anchor = true;
            }
            Instruction::Loop(body) => {
                let head = self.anchor(out);
                let mut inner = Vec::new();
                self.lower_loop_body(body, head, &mut inner);
                out.push(WalkItem::Loop(LoopSpec { head, body: inner }));
                self.current = head;
                self.can_anchor = false;
            }
            Instruction::ZeroTest { counter, triple } => {
                self.lower_ztest(counter, triple, None, out);
            }
        }
    }

    /// Lower a loop body so that its last transition returns to `head`.
    fn lower_loop_body(
        &mut self,
        body: &'p [Instruction],
        head: StateId,
        out: &mut Vec<WalkItem>,
    ) {
        let Some((last, init)) = body.split_last() else {
            // An empty loop still needs a cycle to iterate.
            let effect = self.zeros();
            let t = self.vass.add_transition(head, effect, head);
            out.push(WalkItem::Forward(t));
            return;
        };
        for instr in init {
            self.lower_instr(instr, out);
        }
        match last {
            Instruction::Add(x, k) => {
                let effect = self.add_effect(x, *k);
                let t = self.vass.add_transition(self.current, effect, head);
                out.push(WalkItem::Forward(t));
            }
            Instruction::ZeroTest { counter, triple } => {
                self.lower_ztest(counter, triple, Some(head), out);
            }
            Instruction::Loop(_) => {
                self.lower_instr(last, out);
                if self.current != head {
                    let effect = self.zeros();
                    let t = self.vass.add_transition(self.current, effect, head);
                    out.push(WalkItem::Forward(t));
                }
            }
        }
    }

    fn lower_ztest(
        &mut self,
        counter: &str,
        triple: &str,
        close_at: Option<StateId>,
        out: &mut Vec<WalkItem>,
    ) {
        let program = self.program;
        let ti = program.triple_by_bound(triple).expect("validated");
        let spec = &program.triples[ti];
        let tested = self.coord(counter);
        // The transfer chain: tested counter, remaining guards, bound.
        let mut chain = vec![tested];
        chain.extend(
            spec.guards
                .iter()
                .filter(|g| g.as_str() != counter)
                .map(|g| self.coord(g)),
        );
        chain.push(self.coord(&spec.b));
        let budget = self.coord(&spec.c);
        let sensor = self.coord(&spec.d);
        let k = chain.len() - 1;

        let mut states = Vec::with_capacity(2 * k);
        for i in 0..2 * k {
            // Shift one unit towards the tested counter, then back again,
            // one link of the chain per control point.
            let (from, to) = if i < k {
                (chain[i + 1], chain[i])
            } else {
                (chain[2 * k - 1 - i], chain[2 * k - i])
            };
            let head = self.anchor(out);
            states.push(head);
            let mut effect = self.zeros();
            effect[from] -= 1;
            effect[to] += 1;
            effect[sensor] -= 1;
            let t = self.vass.add_transition(head, effect, head);
            out.push(WalkItem::Loop(LoopSpec {
                head,
                body: vec![WalkItem::Forward(t)],
            }));
            self.can_anchor = false;
        }

        let exit = match close_at {
            Some(h) => h,
            None => self.fresh_point(),
        };
        let mut effect = self.zeros();
        effect[budget] -= 2;
        let settle = self.vass.add_transition(self.current, effect, exit);
        out.push(WalkItem::Forward(settle));
        self.current = exit;
        self.can_anchor = close_at.is_none();
        self.zero_tests.push(ZeroTestSite {
            states,
            exit,
            settle,
            tested,
            triple: ti,
        });
    }
}
