use std::collections::HashSet;
use std::fmt;

use crate::GadgetError;

/// One step of a counter program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instruction {
    /// `counter += k` (k may be negative).  Lowered to a single transition;
    /// when the counter is guarded by a triple, the triple's bound counter
    /// absorbs `-k` on the same transition so the guard invariant survives.
    Add(String, i64),
    /// Repeat the body a nondeterministic number of times (possibly zero).
    Loop(Vec<Instruction>),
    /// Zero-test a guarded counter against the triple whose bound counter is
    /// named by `triple`.
    ZeroTest { counter: String, triple: String },
}

/// A multiplication triple `(b, c, d)`: bound, budget, and sensor.
///
/// Loaded with `b = B`, `c = C`, `d = B * C`, the triple pays for `C / 2`
/// zero tests over its guard counters, whose combined value (together with
/// `b` itself) never exceeds `B`.  The sensor can be drained to zero exactly
/// when all paid-for tests ran and every tested counter was zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTriple {
    /// Bound counter; zero-test loops borrow from and restore it.
    pub b: String,
    /// Budget counter; each zero test settles by subtracting 2.
    pub c: String,
    /// Sensor counter; every zero-test loop also decrements it.
    pub d: String,
    /// Counters this triple may zero-test.
    pub guards: Vec<String>,
    /// Intended initial `(B, C)` load when the construction pins one; the
    /// sensor then starts at `B * C`.  Purely documentary.
    pub intended: Option<(u64, u64)>,
}

impl MultiplicationTriple {
    /// All counters owned by the triple: roles first, then guards.
    pub fn members(&self) -> impl Iterator<Item = &str> {
        [self.b.as_str(), self.c.as_str(), self.d.as_str()]
            .into_iter()
            .chain(self.guards.iter().map(String::as_str))
    }
}

/// A structured counter program, the input language of the gadget compiler.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CounterProgram {
    pub name: String,
    /// Declared counters, in coordinate order.
    pub counters: Vec<String>,
    pub triples: Vec<MultiplicationTriple>,
    /// Mirror pairs `(original, copy)`: the copy receives every update the
    /// original does, transition by transition, and may not be touched
    /// directly.
    pub pairs: Vec<(String, String)>,
    pub body: Vec<Instruction>,
}

impl CounterProgram {
    /// Parse the line-oriented text format; see [`parse_program`].
    pub fn parse(name: &str, text: &str) -> Result<Self, GadgetError> {
        parse_program(name, text)
    }

    /// Index of the triple whose bound counter is `name`.
    pub(crate) fn triple_by_bound(&self, name: &str) -> Option<usize> {
        self.triples.iter().position(|t| t.b == name)
    }

    /// Index of the (unique, by validation) triple guarding `counter`.
    pub(crate) fn triple_of_guard(&self, counter: &str) -> Option<usize> {
        self.triples
            .iter()
            .position(|t| t.guards.iter().any(|g| g == counter))
    }

    fn declared(&self, name: &str) -> bool {
        self.counters.iter().any(|c| c == name)
    }

    /// Check the static rules every compilable program must satisfy:
    /// declarations are consistent, triples do not share counters, mirror
    /// copies are write-protected, and no instruction updates a budget or
    /// sensor counter directly (such an update could not be compensated).
    pub fn validate(&self) -> Result<(), GadgetError> {
        let mut seen = HashSet::new();
        for c in &self.counters {
            if c.is_empty() || c.split_whitespace().count() != 1 {
                return Err(GadgetError::Malformed {
                    line: 0,
                    msg: format!("counter name {c:?} is not a single word"),
                });
            }
            if !seen.insert(c.as_str()) {
                return Err(GadgetError::DuplicateCounter(c.clone()));
            }
        }

        let mut owned = HashSet::new();
        for t in &self.triples {
            let mut mine = HashSet::new();
            for m in t.members() {
                if !self.declared(m) {
                    return Err(GadgetError::UndeclaredCounter(m.to_string()));
                }
                if !mine.insert(m) {
                    return Err(GadgetError::OverlappingTriples(m.to_string()));
                }
            }
            for m in t.members() {
                if !owned.insert(m) {
                    return Err(GadgetError::OverlappingTriples(m.to_string()));
                }
            }
        }

        let mut copies = HashSet::new();
        let originals: HashSet<&str> = self.pairs.iter().map(|(o, _)| o.as_str()).collect();
        for (orig, copy) in &self.pairs {
            for n in [orig, copy] {
                if !self.declared(n) {
                    return Err(GadgetError::UndeclaredCounter(n.clone()));
                }
            }
            let reject = |why| GadgetError::BadMirror {
                orig: orig.clone(),
                copy: copy.clone(),
                why,
            };
            if orig == copy {
                return Err(reject("a counter cannot mirror itself"));
            }
            if !copies.insert(copy.as_str()) {
                return Err(reject("the copy already mirrors another counter"));
            }
            if originals.contains(copy.as_str()) {
                return Err(reject("the copy is itself mirrored"));
            }
            if owned.contains(copy.as_str()) {
                return Err(reject("the copy belongs to a multiplication triple"));
            }
        }

        self.check_body(&self.body, &copies)
    }

    fn check_body(
        &self,
        body: &[Instruction],
        copies: &HashSet<&str>,
    ) -> Result<(), GadgetError> {
        for instr in body {
            match instr {
                Instruction::Add(x, _) => {
                    if !self.declared(x) {
                        return Err(GadgetError::UndeclaredCounter(x.clone()));
                    }
                    if copies.contains(x.as_str()) {
                        return Err(GadgetError::MirroredCounter(x.clone()));
                    }
                    for t in &self.triples {
                        if *x == t.c {
                            return Err(GadgetError::UnbalancedUpdate {
                                counter: x.clone(),
                                role: "budget",
                            });
                        }
                        if *x == t.d {
                            return Err(GadgetError::UnbalancedUpdate {
                                counter: x.clone(),
                                role: "sensor",
                            });
                        }
                    }
                }
                Instruction::Loop(inner) => self.check_body(inner, copies)?,
                Instruction::ZeroTest { counter, triple } => {
                    if !self.declared(counter) {
                        return Err(GadgetError::UndeclaredCounter(counter.clone()));
                    }
                    let Some(ti) = self.triple_by_bound(triple) else {
                        return Err(GadgetError::UnknownTriple(triple.clone()));
                    };
                    if !self.triples[ti].guards.iter().any(|g| g == counter) {
                        return Err(GadgetError::UntestableCounter {
                            counter: counter.clone(),
                            triple: triple.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CounterProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_program(self))
    }
}

/// Parse the line-oriented counter-program text format.
///
/// Declarations come first, one per line: `counter <name>...`,
/// `triple <b> <c> <d> guards <name>...`, and `pair <original> <copy>`.
/// The body follows with `add <counter> <k>`, `loop` ... `end`, and
/// `ztest <counter> using <bound-counter>`.  Blank lines and `#` comments
/// are ignored; indentation is not significant.  The parsed program is
/// validated before it is returned.
pub fn parse_program(name: &str, text: &str) -> Result<CounterProgram, GadgetError> {
    let mut program = CounterProgram {
        name: name.to_string(),
        ..CounterProgram::default()
    };
    // Stack of open loop bodies; the bottom entry is the program body.
    let mut stack: Vec<(usize, Vec<Instruction>)> = vec![(0, Vec::new())];
    let mut body_started = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace().take_while(|t| !t.starts_with('#'));
        let Some(head) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();
        let malformed = |msg: String| GadgetError::Malformed { line, msg };

        let declaration = matches!(head, "counter" | "triple" | "pair");
        if declaration {
            if body_started {
                return Err(malformed("declarations must precede the body".into()));
            }
            if stack.len() != 1 {
                return Err(malformed("declarations cannot appear inside a loop".into()));
            }
        }

        match head {
            "counter" => {
                if rest.is_empty() {
                    return Err(malformed("`counter` needs at least one name".into()));
                }
                program.counters.extend(rest.iter().map(|s| s.to_string()));
            }
            "triple" => {
                let [b, c, d, kw, guards @ ..] = rest.as_slice() else {
                    return Err(malformed(
                        "expected `triple <b> <c> <d> guards <name>...`".into(),
                    ));
                };
                if *kw != "guards" {
                    return Err(malformed(format!("expected `guards`, found {kw:?}")));
                }
                program.triples.push(MultiplicationTriple {
                    b: b.to_string(),
                    c: c.to_string(),
                    d: d.to_string(),
                    guards: guards.iter().map(|s| s.to_string()).collect(),
                    intended: None,
                });
            }
            "pair" => {
                let [orig, copy] = rest.as_slice() else {
                    return Err(malformed("expected `pair <original> <copy>`".into()));
                };
                program.pairs.push((orig.to_string(), copy.to_string()));
            }
            "add" => {
                body_started = true;
                let [x, k] = rest.as_slice() else {
                    return Err(malformed("expected `add <counter> <k>`".into()));
                };
                let k: i64 = k
                    .parse()
                    .map_err(|_| malformed(format!("bad increment {k:?}")))?;
                let top = &mut stack.last_mut().expect("stack never empties").1;
                top.push(Instruction::Add(x.to_string(), k));
            }
            "loop" => {
                body_started = true;
                if !rest.is_empty() {
                    return Err(malformed("`loop` takes no arguments".into()));
                }
                stack.push((line, Vec::new()));
            }
            "end" => {
                body_started = true;
                if !rest.is_empty() {
                    return Err(malformed("`end` takes no arguments".into()));
                }
                if stack.len() == 1 {
                    return Err(GadgetError::StrayEnd(line));
                }
                let (_, closed) = stack.pop().expect("checked above");
                let top = &mut stack.last_mut().expect("stack never empties").1;
                top.push(Instruction::Loop(closed));
            }
            "ztest" => {
                body_started = true;
                let [counter, kw, triple] = rest.as_slice() else {
                    return Err(malformed(
                        "expected `ztest <counter> using <bound-counter>`".into(),
                    ));
                };
                if *kw != "using" {
                    return Err(malformed(format!("expected `using`, found {kw:?}")));
                }
                let top = &mut stack.last_mut().expect("stack never empties").1;
                top.push(Instruction::ZeroTest {
                    counter: counter.to_string(),
                    triple: triple.to_string(),
                });
            }
            other => return Err(malformed(format!("unknown directive {other:?}"))),
        }
    }

    if stack.len() > 1 {
        return Err(GadgetError::UnclosedLoop(stack.last().expect("len > 1").0));
    }
    program.body = stack.pop().expect("bottom entry").1;
    program.validate()?;
    Ok(program)
}

/// Serialize a program to the text format accepted by [`parse_program`].
pub fn render_program(program: &CounterProgram) -> String {
    let mut out = String::new();
    if !program.counters.is_empty() {
        out.push_str("counter");
        for c in &program.counters {
            out.push(' ');
            out.push_str(c);
        }
        out.push('\n');
    }
    for t in &program.triples {
        out.push_str(&format!("triple {} {} {} guards", t.b, t.c, t.d));
        for g in &t.guards {
            out.push(' ');
            out.push_str(g);
        }
        out.push('\n');
    }
    for (orig, copy) in &program.pairs {
        out.push_str(&format!("pair {orig} {copy}\n"));
    }
    render_body(&program.body, 0, &mut out);
    out
}

fn render_body(body: &[Instruction], depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for instr in body {
        match instr {
            Instruction::Add(x, k) => out.push_str(&format!("{pad}add {x} {k}\n")),
            Instruction::Loop(inner) => {
                out.push_str(&format!("{pad}loop\n"));
                render_body(inner, depth + 1, out);
                out.push_str(&format!("{pad}end\n"));
            }
            Instruction::ZeroTest { counter, triple } => {
                out.push_str(&format!("{pad}ztest {counter} using {triple}\n"));
            }
        }
    }
}
