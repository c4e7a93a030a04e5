//! One handler per subcommand. Each handler parses its inputs, calls a
//! single library operation, and restates the outcome as facts; the only
//! logic here is the mapping from library verdicts to statuses.

use std::fmt::Display;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use vasskit_core::{parse_vass, Configuration, Vass};
use vasskit_gadgets::{
    build_tower_instance, compile, compile_old_amplifier, compile_stage, trivial_machine,
    AmplifierIo, CompiledGadget, CounterProgram, GadgetError, Instruction, MultiplicationTriple,
    OldAmplifierIo,
};
use vasskit_geometry::{classify_small, classify_thin, cycle_space, Classification, Verdict};
use vasskit_oracles::{backward_coverability_budgeted, bfs_reach, karp_miller_budgeted, OracleError};
use vasskit_search::{
    bounds, check_no_pump_property, decide_boundedness, decide_coverability, decide_uniform_cover,
    BoundParams, BoundTable, BoundednessVerdict, CoverVerdict, PumpVerdict, SearchError,
};
use vasskit_zreach::{decide_zreach, shortest_zrun, within_ratio, ZReachError};

use crate::corpus::{self, GenSpec};
use crate::literal;
use crate::opts::{Cli, Command, GadgetCmd, OracleCmd, Table};
use crate::report::{digest, InputStamp, Report, Status};

pub fn dispatch(cli: &Cli, echo: &str) -> Report {
    match &cli.command {
        Command::Dim { file } => dim(echo, file),
        Command::Cover {
            file,
            source,
            target,
        } => cover(cli, echo, file, source, target),
        Command::Bounded { file, source } => bounded(cli, echo, file, source),
        Command::Simub {
            file,
            source,
            state,
            threshold,
        } => simub(cli, echo, file, source, state, threshold),
        Command::Nopump {
            file,
            source,
            threshold,
        } => nopump(cli, echo, file, source, threshold),
        Command::Zreach {
            file,
            source,
            target,
            shortest,
        } => zreach(cli, echo, file, source, target, *shortest),
        Command::Bounds {
            d,
            n,
            m,
            g,
            ynorm,
            threshold,
            table,
        } => bound_tables(echo, *d, *n, m, *g, ynorm, threshold, *table),
        Command::Classify { file, v, c, cvec } => classify(echo, file, v, c.as_ref(), cvec.as_deref()),
        Command::Oracle { which } => oracle(cli, echo, which),
        Command::Gadget { which } => gadget(echo, which),
        Command::Gen {
            out,
            count,
            d,
            states,
            trans,
            m,
            require_gscc,
        } => gen(cli, echo, out, *count, *d, *states, *trans, *m, *require_gscc),
    }
}

fn load(echo: &str, file: &Path) -> Result<(Vass, InputStamp), Report> {
    let text = fs::read_to_string(file)
        .map_err(|e| Report::error(echo, format!("{}: {e}", file.display())))?;
    let vass = parse_vass(&text)
        .map_err(|e| Report::error(echo, format!("{}: {e}", file.display())))?;
    let stamp = InputStamp {
        path: file.display().to_string(),
        digest: digest(&text),
    };
    Ok((vass, stamp))
}

fn based(echo: &str, stamp: InputStamp) -> Report {
    let mut r = Report::new(echo);
    r.input = Some(stamp);
    r
}

fn input_error(echo: &str, stamp: InputStamp, message: impl Display) -> Report {
    let mut r = Report::error(echo, message);
    r.input = Some(stamp);
    r
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn dim(echo: &str, file: &Path) -> Report {
    let (vass, stamp) = match load(echo, file) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let space = cycle_space(&vass);
    let mut r = based(echo, stamp);
    r.fact("states", vass.states.len());
    r.fact("transitions", vass.transitions.len());
    r.fact("d", vass.dim);
    r.fact("M", vass.max_norm());
    r.fact("g", space.rank);
    r.fact("g_scc", space.scc_rank());
    r.fact("scc_ranks", join(&space.per_scc_rank, ","));
    r.fact("distinguished", join(&space.basis.distinguished, ","));
    for (i, row) in space.basis.basis.iter().enumerate() {
        r.fact(format!("basis_{i}"), join(row, " "));
    }
    r
}

#[allow(clippy::too_many_arguments)]
fn bound_tables(
    echo: &str,
    d: usize,
    n: usize,
    m: &BigInt,
    g: usize,
    ynorm: &BigInt,
    threshold: &BigInt,
    table: Table,
) -> Report {
    if n == 0 || g > d {
        return Report::error(echo, "need n >= 1 and g <= d");
    }
    let params = BoundParams::new(d, n, m.clone(), g)
        .with_target_norm(ynorm.clone())
        .with_uniform_target(threshold.clone());
    let t = bounds(&params);
    let mut r = Report::new(echo);
    r.fact("d", d);
    r.fact("n", n);
    r.fact("M", m);
    r.fact("g", g);
    r.fact("ynorm", ynorm);
    r.fact("G", threshold);
    let cover = matches!(table, Table::Cover | Table::All);
    let uniform = matches!(table, Table::Uniform | Table::All);
    let selfcover = matches!(table, Table::Selfcover | Table::All);
    let mut clamped = false;
    if cover {
        for (i, v) in t.cover_l.iter().enumerate() {
            clamped |= t.is_clamped(v);
            r.fact(format!("L_{i}"), v);
        }
        for (i, v) in t.cover_k.iter().enumerate() {
            clamped |= t.is_clamped(v);
            r.fact(format!("K_{i}"), v);
        }
        r.fact("L_closed", &t.cover_l_closed);
        r.fact("K_closed", &t.cover_k_closed);
    }
    if uniform {
        for (i, v) in t.uniform_c.iter().enumerate() {
            r.fact(format!("uniform_C_{i}"), v);
        }
        for (i, v) in t.uniform_h.iter().enumerate() {
            r.fact(format!("uniform_H_{i}"), v);
        }
        for (i, v) in t.uniform_l.iter().enumerate() {
            clamped |= t.is_clamped(v);
            r.fact(format!("uniform_L_{i}"), v);
        }
        r.fact("uniform_closed", &t.uniform_closed);
    }
    if selfcover {
        r.fact("selfcover_D", &t.selfcover_d);
        for (i, v) in t.selfcover_l.iter().enumerate() {
            clamped |= t.is_clamped(v);
            r.fact(format!("selfcover_L_{i}"), v);
        }
        r.fact("selfcover_closed", &t.selfcover_closed);
    }
    r.fact("clamped", if clamped { "yes" } else { "no" });
    r
}

/// Cap resolution shared by the covering searches: the override if given,
/// else the proven bound. The result certifies a cap-reached outcome only
/// when it is at least the proven bound and that bound is exact.
fn resolve_cap(cli: &Cli, proven: &BigInt, table: &BoundTable) -> (BigInt, bool) {
    let cap = cli.cap.clone().unwrap_or_else(|| proven.clone());
    let certified = cap >= *proven && !table.is_clamped(proven);
    (cap, certified)
}

fn cover(cli: &Cli, echo: &str, file: &Path, source: &str, target: &str) -> Report {
    let (vass, stamp) = match load(echo, file) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let (s, t) = match literal::nonneg(&vass, source).and_then(|s| {
        literal::nonneg(&vass, target).map(|t| (s, t))
    }) {
        Ok(st) => st,
        Err(m) => return input_error(echo, stamp, m),
    };
    let params = BoundParams::of_instance(&vass).with_target_norm(t.max_norm());
    let table = bounds(&params);
    let g = table.params.g;
    let proven = table.cover_cap();
    let (cap, certified) = resolve_cap(cli, &proven, &table);
    let mut r = based(echo, stamp);
    r.fact("g", g);
    r.fact("L_g", &table.cover_l[g]);
    r.fact("K_g", &table.cover_k[g]);
    r.fact("cap", &cap);
    r.fact("budget", cli.budget);
    match decide_coverability(&vass, &s, &t, &cap, cli.budget) {
        Ok(rep) => {
            r.fact("nodes", rep.nodes_expanded);
            match rep.verdict {
                CoverVerdict::Witness(w) => {
                    r.fact("verdict", "yes");
                    r.fact("witness_length", w.run.len());
                    r.fact("witness", join(&w.run.steps, " "));
                }
                CoverVerdict::Saturated => {
                    r.fact("verdict", "no");
                    r.fact("note", "search saturated below the cap");
                }
                CoverVerdict::CapReached if certified => {
                    r.fact("verdict", "no");
                    r.fact("note", "cap is a proven witness-length bound");
                }
                CoverVerdict::CapReached => {
                    r.status = Status::Inconclusive;
                    r.fact("verdict", "unknown");
                    r.fact("note", "cap reached below the proven bound");
                }
            }
        }
        Err(SearchError::BudgetExceeded { .. }) => {
            r.status = Status::Inconclusive;
            r.fact("verdict", "unknown");
            r.fact("note", "node budget exhausted");
        }
        Err(e) => return input_error(echo, r.input.take().expect("stamped"), e),
    }
    r
}

fn bounded(cli: &Cli, echo: &str, file: &Path, source: &str) -> Report {
    let (vass, stamp) = match load(echo, file) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let s = match literal::nonneg(&vass, source) {
        Ok(c) => c,
        Err(m) => return input_error(echo, stamp, m),
    };
    let params = BoundParams::of_instance(&vass);
    let table = bounds(&params);
    let proven = table.selfcover_cap().clone();
    let (cap, certified) = resolve_cap(cli, &proven, &table);
    let mut r = based(echo, stamp);
    r.fact("g", table.params.g);
    r.fact("selfcover_L_g", &proven);
    r.fact("cap", &cap);
    r.fact("budget", cli.budget);
    match decide_boundedness(&vass, &s, &cap, cli.budget) {
        Ok(rep) => {
            r.fact("nodes", rep.nodes_expanded);
            match rep.verdict {
                BoundednessVerdict::Bounded => {
                    r.fact("verdict", "bounded");
                }
                BoundednessVerdict::Unbounded(w) => {
                    r.fact("verdict", "unbounded");
                    r.fact("witness_length", w.run.len());
                    r.fact("split", w.split);
                    r.fact("witness", join(&w.run.steps, " "));
                }
                BoundednessVerdict::CapReached if certified => {
                    r.fact("verdict", "bounded");
                    r.fact("note", "cap is a proven witness-length bound");
                }
                BoundednessVerdict::CapReached => {
                    r.status = Status::Inconclusive;
                    r.fact("verdict", "unknown");
                    r.fact("note", "cap reached below the proven bound");
                }
            }
        }
        Err(SearchError::BudgetExceeded { .. }) => {
            r.status = Status::Inconclusive;
            r.fact("verdict", "unknown");
            r.fact("note", "node budget exhausted");
        }
        Err(e) => return input_error(echo, r.input.take().expect("stamped"), e),
    }
    r
}

fn simub(
    cli: &Cli,
    echo: &str,
    file: &Path,
    source: &str,
    state: &str,
    threshold: &BigInt,
) -> Report {
    let (vass, stamp) = match load(echo, file) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let s = match literal::nonneg(&vass, source) {
        Ok(c) => c,
        Err(m) => return input_error(echo, stamp, m),
    };
    let Some(q) = vass.state_index(state) else {
        return input_error(echo, stamp, format!("unknown state `{state}`"));
    };
    let params = BoundParams::of_instance(&vass).with_uniform_target(threshold.clone());
    let table = bounds(&params);
    let proven = table.uniform_cap().clone();
    let (cap, certified) = resolve_cap(cli, &proven, &table);
    let mut r = based(echo, stamp);
    r.fact("state", state);
    r.fact("G", threshold);
    r.fact("uniform_L_g", &proven);
    r.fact("cap", &cap);
    r.fact("budget", cli.budget);
    match decide_uniform_cover(&vass, &s, q, threshold, &cap, cli.budget) {
        Ok(rep) => {
            r.fact("nodes", rep.nodes_expanded);
            match rep.verdict {
                CoverVerdict::Witness(w) => {
                    r.fact("verdict", "yes");
                    r.fact("witness_length", w.run.len());
                    r.fact("witness", join(&w.run.steps, " "));
                }
                CoverVerdict::Saturated => {
                    r.fact("verdict", "no");
                    r.fact("note", "search saturated below the cap");
                }
                CoverVerdict::CapReached if certified => {
                    r.fact("verdict", "no");
                    r.fact("note", "cap is a proven witness-length bound");
                }
                CoverVerdict::CapReached => {
                    r.status = Status::Inconclusive;
                    r.fact("verdict", "unknown");
                    r.fact("note", "cap reached below the proven bound");
                }
            }
        }
        Err(SearchError::BudgetExceeded { .. }) => {
            r.status = Status::Inconclusive;
            r.fact("verdict", "unknown");
            r.fact("note", "node budget exhausted");
        }
        Err(e) => return input_error(echo, r.input.take().expect("stamped"), e),
    }
    r
}

fn nopump(cli: &Cli, echo: &str, file: &Path, source: &str, threshold: &BigInt) -> Report {
    let (vass, stamp) = match load(echo, file) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let s = match literal::nonneg(&vass, source) {
        Ok(c) => c,
        Err(m) => return input_error(echo, stamp, m),
    };
    let mut r = based(echo, stamp);
    r.fact("G", threshold);
    r.fact("budget", cli.budget);
    match check_no_pump_property(&vass, &s, threshold, cli.budget) {
        Ok(rep) => {
            r.fact("high_mark", &rep.high_mark);
            r.fact("cover_bound", &rep.cover_bound);
            r.fact("nodes", rep.nodes_expanded);
            if let Some(premise) = &rep.premise_run {
                r.fact("premise_length", premise.len());
            }
            match rep.verdict {
                PumpVerdict::Vacuous { exhaustive: true } => {
                    r.fact("verdict", "vacuous");
                    r.fact("note", "the premise provably never fires");
                }
                PumpVerdict::Vacuous { exhaustive: false } => {
                    r.status = Status::Inconclusive;
                    r.fact("verdict", "vacuous");
                    r.fact("note", "premise not found within the horizon");
                }
                PumpVerdict::Confirmed {
                    premise_state,
                    witness,
                } => {
                    r.fact("verdict", "confirmed");
                    r.fact("premise_state", vass.state_name(premise_state));
                    r.fact("witness_length", witness.run.len());
                }
                PumpVerdict::Violated { premise_state } => {
                    r.fact("verdict", "violated");
                    r.fact("premise_state", vass.state_name(premise_state));
                }
                PumpVerdict::Inconclusive => {
                    r.status = Status::Inconclusive;
                    r.fact("verdict", "unknown");
                    r.fact("note", "a resource ceiling interrupted the check");
                }
            }
        }
        Err(SearchError::BudgetExceeded { .. }) => {
            r.status = Status::Inconclusive;
            r.fact("verdict", "unknown");
            r.fact("note", "node budget exhausted");
        }
        Err(e) => return input_error(echo, r.input.take().expect("stamped"), e),
    }
    r
}

fn zreach(
    cli: &Cli,
    echo: &str,
    file: &Path,
    source: &str,
    target: &str,
    shortest: bool,
) -> Report {
    let (vass, stamp) = match load(echo, file) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let (s, t) = match literal::integer(&vass, source)
        .and_then(|s| literal::integer(&vass, target).map(|t| (s, t)))
    {
        Ok(st) => st,
        Err(m) => return input_error(echo, stamp, m),
    };
    let mut r = based(echo, stamp);
    r.fact("budget", cli.budget);
    match decide_zreach(&vass, &s, &t) {
        Ok(Some(run)) => {
            r.fact("verdict", "yes");
            r.fact("run_length", run.len());
            if shortest {
                let cap = cli
                    .cap
                    .as_ref()
                    .and_then(BigInt::to_usize)
                    .unwrap_or(run.len());
                r.fact("shortest_cap", cap);
                match shortest_zrun(&vass, &s, &t, cap, cli.budget) {
                    Ok(Some(short)) => {
                        r.fact("shortest_length", short.len());
                        r.fact(
                            "ratio_ok",
                            if within_ratio(&vass, &s, &t, short.len(), 8) {
                                "yes"
                            } else {
                                "no"
                            },
                        );
                    }
                    Ok(None) => {
                        r.fact("shortest_length", "none within the cap");
                    }
                    Err(ZReachError::BudgetExceeded { .. }) => {
                        r.status = Status::Inconclusive;
                        r.fact("note", "shortest-run budget exhausted");
                    }
                    Err(e) => return input_error(echo, r.input.take().expect("stamped"), e),
                }
            }
        }
        Ok(None) => {
            r.fact("verdict", "no");
            r.fact("note", "no balanced transition multiset connects the endpoints");
        }
        Err(e @ (ZReachError::TooManyTransitions { .. } | ZReachError::BudgetExceeded { .. })) => {
            r.status = Status::Inconclusive;
            r.fact("verdict", "unknown");
            r.fact("note", e);
        }
        Err(e) => return input_error(echo, r.input.take().expect("stamped"), e),
    }
    r
}

fn classify(
    echo: &str,
    file: &Path,
    v: &str,
    c: Option<&BigInt>,
    cvec: Option<&[BigInt]>,
) -> Report {
    let (vass, stamp) = match load(echo, file) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let values: Vec<BigInt> = match v
        .split(',')
        .map(|p| p.trim().parse::<BigInt>())
        .collect::<Result<_, _>>()
    {
        Ok(vs) => vs,
        Err(e) => return input_error(echo, stamp, format!("bad vector `{v}`: {e}")),
    };
    let space = cycle_space(&vass);
    let outcome: Result<Classification, _> = match (c, cvec) {
        (Some(c), None) => classify_small(&space, &values, c),
        (None, Some(ts)) => classify_thin(&space, &values, ts),
        _ => return input_error(echo, stamp, "give exactly one of --C and --Cvec"),
    };
    let mut r = based(echo, stamp);
    r.fact("g", space.rank);
    r.fact("g_scc", space.scc_rank());
    if let Some(c) = c {
        r.fact("C", c);
    }
    if let Some(ts) = cvec {
        r.fact("Cvec", join(ts, ","));
    }
    match outcome {
        Ok(cl) => {
            let label = match cl.verdict {
                Verdict::Small => "small",
                Verdict::Large => "large",
                Verdict::Thin => "thin",
                Verdict::Thick => "thick",
            };
            r.fact("verdict", label);
            r.fact("distinguished", join(&cl.distinguished, ","));
            r.fact("profile", join(&cl.profile, ","));
            for (i, row) in cl.basis.basis.iter().enumerate() {
                r.fact(format!("basis_{i}"), join(row, " "));
            }
            r
        }
        Err(e) => input_error(echo, r.input.take().expect("stamped"), e),
    }
}

fn oracle(cli: &Cli, echo: &str, which: &OracleCmd) -> Report {
    match which {
        OracleCmd::Bfs {
            file,
            source,
            ceiling,
            depth,
        } => {
            let (vass, stamp) = match load(echo, file) {
                Ok(v) => v,
                Err(r) => return r,
            };
            let s = match literal::nonneg(&vass, source) {
                Ok(c) => c,
                Err(m) => return input_error(echo, stamp, m),
            };
            let depth = depth.unwrap_or(usize::MAX);
            let reach = bfs_reach(&vass, &s, ceiling, depth);
            let mut r = based(echo, stamp);
            r.fact("box", ceiling);
            r.fact(
                "depth",
                if depth == usize::MAX {
                    "unbounded".to_string()
                } else {
                    depth.to_string()
                },
            );
            r.fact("explored", reach.order.len());
            r.fact("truncated", if reach.truncated { "yes" } else { "no" });
            r
        }
        OracleCmd::Backward {
            file,
            target,
            source,
        } => {
            let (vass, stamp) = match load(echo, file) {
                Ok(v) => v,
                Err(r) => return r,
            };
            let t = match literal::nonneg(&vass, target) {
                Ok(c) => c,
                Err(m) => return input_error(echo, stamp, m),
            };
            let src: Option<Configuration> = match source {
                Some(lit) => match literal::nonneg(&vass, lit) {
                    Ok(c) => Some(c),
                    Err(m) => return input_error(echo, stamp, m),
                },
                None => None,
            };
            let mut r = based(echo, stamp);
            r.fact("budget", cli.budget);
            match backward_coverability_budgeted(&vass, &t, cli.budget) {
                Ok(basis) => {
                    r.fact("basis_size", basis.total_len());
                    if let Some(s) = src {
                        r.fact(
                            "coverable",
                            if basis.coverable_from(&s) { "yes" } else { "no" },
                        );
                    }
                }
                Err(OracleError::BudgetExceeded { .. }) => {
                    r.status = Status::Inconclusive;
                    r.fact("note", "insertion budget exhausted");
                }
            }
            r
        }
        OracleCmd::Km { file, source } => {
            let (vass, stamp) = match load(echo, file) {
                Ok(v) => v,
                Err(r) => return r,
            };
            let s = match literal::nonneg(&vass, source) {
                Ok(c) => c,
                Err(m) => return input_error(echo, stamp, m),
            };
            let budget = cli.budget.to_usize().unwrap_or(usize::MAX);
            let tree = karp_miller_budgeted(&vass, &s, budget);
            let mut r = based(echo, stamp);
            r.fact("budget", cli.budget);
            r.fact("nodes", tree.len());
            r.fact("truncated", if tree.truncated { "yes" } else { "no" });
            match tree.bounded() {
                Some(true) => {
                    r.fact("verdict", "bounded");
                }
                Some(false) => {
                    r.fact("verdict", "unbounded");
                }
                None => {
                    r.status = Status::Inconclusive;
                    r.fact("verdict", "unknown");
                    r.fact("note", "tree construction hit the node budget");
                }
            }
            r
        }
    }
}

/// Demo program for a standalone zero test: one triple whose bound guards
/// `k` counters, a compensated pump on the first guard, then the test.
fn ztest_demo(guards: usize) -> Result<CompiledGadget, GadgetError> {
    let names: Vec<String> = (1..=guards).map(|i| format!("g{i}")).collect();
    let mut counters = names.clone();
    counters.extend(["b", "c", "d"].map(String::from));
    let program = CounterProgram {
        name: "ztest_demo".to_string(),
        counters,
        triples: vec![MultiplicationTriple {
            b: "b".to_string(),
            c: "c".to_string(),
            d: "d".to_string(),
            guards: names.clone(),
            intended: None,
        }],
        pairs: Vec::new(),
        body: vec![
            Instruction::Loop(vec![Instruction::Add(names[0].clone(), 1)]),
            Instruction::ZeroTest {
                counter: names[0].clone(),
                triple: "b".to_string(),
            },
        ],
    };
    compile(&program)
}

fn gadget(echo: &str, which: &GadgetCmd) -> Report {
    let mut extra: Vec<(String, String)> = Vec::new();
    let (built, emit) = match which {
        GadgetCmd::Ztest { guards, emit } => {
            if !(1..=6).contains(guards) {
                return Report::error(echo, "supported guard counts are 1..=6");
            }
            (ztest_demo(*guards), emit)
        }
        GadgetCmd::Amplifier { stage, emit } => {
            if *stage == 0 {
                return Report::error(echo, "stages are numbered from 1");
            }
            (compile_stage(*stage, &AmplifierIo::for_stage(*stage)), emit)
        }
        GadgetCmd::OldAmplifier { emit } => {
            (compile_old_amplifier(&OldAmplifierIo::conventional()), emit)
        }
        GadgetCmd::Tower {
            height,
            bound,
            emit,
        } => match build_tower_instance(*height, *bound, &trivial_machine()) {
            Ok(tower) => {
                extra.push(("height".to_string(), tower.height.to_string()));
                extra.push(("seed_bound".to_string(), tower.seed.to_string()));
                extra.push(("machine_bound".to_string(), tower.machine_bound.to_string()));
                (Ok(tower.gadget), emit)
            }
            Err(e) => (Err(e), emit),
        },
    };
    let gadget = match built {
        Ok(g) => g,
        Err(e) => return Report::error(echo, e),
    };
    let space = cycle_space(&gadget.vass);
    let mut r = Report::new(echo);
    r.fact("name", &gadget.vass.name);
    r.fact("states", gadget.vass.states.len());
    r.fact("transitions", gadget.vass.transitions.len());
    r.fact("counters", gadget.counters.len());
    r.fact("g", space.rank);
    r.fact("g_scc", space.scc_rank());
    if let Some(p) = gadget.promised_dimension {
        r.fact("promised_g_scc", p);
    }
    r.fact(
        "sensors",
        join(gadget.sensors.iter().map(|&i| &gadget.counters[i]), ","),
    );
    r.fact("zero_tests", gadget.zero_tests.len());
    r.fact(
        "regions",
        join(gadget.regions.iter().map(|(n, _)| n), ","),
    );
    r.fact(
        "audits",
        if gadget.zero_test_invariants_ok() && gadget.mirrors_ok() {
            "ok"
        } else {
            "violated"
        },
    );
    for (k, v) in extra {
        r.fact(k, v);
    }
    if let Some(path) = emit {
        if let Err(e) = fs::write(path, gadget.vass.to_string()) {
            return input_error(
                echo,
                r.input.take().unwrap_or(InputStamp {
                    path: path.display().to_string(),
                    digest: String::new(),
                }),
                format!("{}: {e}", path.display()),
            );
        }
        r.fact("emitted", path.display().to_string());
    }
    r
}

#[allow(clippy::too_many_arguments)]
fn gen(
    cli: &Cli,
    echo: &str,
    out: &Path,
    count: usize,
    d: usize,
    states: usize,
    trans: usize,
    m: i64,
    require_gscc: Option<usize>,
) -> Report {
    let spec = GenSpec {
        out: out.to_path_buf(),
        count,
        d,
        states,
        trans,
        m,
        require_gscc,
        seed: cli.seed,
    };
    match corpus::generate(&spec) {
        Ok(entries) => {
            let mut r = Report::new(echo);
            r.fact("out", out.display().to_string());
            r.fact("count", entries.len());
            r.fact("seed", cli.seed);
            for (name, stats) in entries {
                r.fact(name, stats);
            }
            r
        }
        Err(m) => Report::error(echo, m),
    }
}
