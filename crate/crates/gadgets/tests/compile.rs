use num_bigint::BigInt;
use vasskit_core::{Run, Semantics};
use vasskit_gadgets::{
    compile, compile_with_universe, parse_program, GadgetError, WalkItem,
};
use vasskit_geometry::{geometric_dimension, scc_dimension};

fn eff(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn strings(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn single_loop_program_is_one_state() {
    let program = parse_program("tiny", "counter x\nloop\n  add x 1\nend\n").unwrap();
    let gadget = compile(&program).unwrap();
    assert_eq!(gadget.vass.states.len(), 1);
    assert_eq!(gadget.vass.transitions.len(), 1);
    let t = &gadget.vass.transitions[0];
    assert_eq!((t.src, t.dst), (0, 0));
    assert_eq!(t.effect, eff(&[1]));
    assert_eq!(gadget.entry, gadget.exit);
}

#[test]
fn empty_loop_still_gets_a_cycle() {
    let program = parse_program("idle", "counter x\nloop\nend\n").unwrap();
    let gadget = compile(&program).unwrap();
    assert_eq!(gadget.vass.states.len(), 1);
    assert_eq!(gadget.vass.transitions.len(), 1);
    assert_eq!(gadget.vass.transitions[0].effect, eff(&[0]));
    let steps = gadget.scripted_run(&[3]).unwrap();
    assert_eq!(steps, vec![0, 0, 0]);
}

#[test]
fn zero_test_block_has_the_pinned_shape() {
    let text = "counter x y b c d\ntriple b c d guards x y\nztest x using b\n";
    let program = parse_program("zt", text).unwrap();
    let gadget = compile(&program).unwrap();

    // Four transfer loops on four consecutive control points, three bridges,
    // one settling transition.
    assert_eq!(gadget.vass.states.len(), 5);
    assert_eq!(gadget.vass.transitions.len(), 8);
    assert_eq!(gadget.zero_tests.len(), 1);
    let site = &gadget.zero_tests[0];
    assert_eq!(site.states, vec![0, 1, 2, 3]);
    assert_eq!(site.exit, 4);
    assert_eq!(site.settle, 7);
    assert_eq!(site.tested, 0);

    let loop_effects: Vec<&[BigInt]> = gadget
        .vass
        .transitions
        .iter()
        .filter(|t| t.src == t.dst)
        .map(|t| t.effect.as_slice())
        .collect();
    // Shift one unit towards x, then back towards b, draining the sensor
    // throughout: (y -> x), (b -> y), (y -> b), (x -> y).
    assert_eq!(
        loop_effects,
        vec![
            eff(&[1, -1, 0, 0, -1]).as_slice(),
            eff(&[0, 1, -1, 0, -1]).as_slice(),
            eff(&[0, -1, 1, 0, -1]).as_slice(),
            eff(&[-1, 1, 0, 0, -1]).as_slice(),
        ]
    );
    assert_eq!(gadget.vass.transitions[site.settle].effect, eff(&[0, 0, 0, -2, 0]));

    assert!(gadget.zero_test_invariants_ok());
    // Each control point carries a single loop, so every strongly connected
    // component stays well under the rank-2 ceiling for a lone test block.
    assert_eq!(scc_dimension(&gadget.vass), 1);
}

#[test]
fn three_guard_test_gets_six_transfer_loops() {
    let text = "counter x y z b c d\ntriple b c d guards x y z\nztest y using b\n";
    let program = parse_program("zt3", text).unwrap();
    let gadget = compile(&program).unwrap();
    let site = &gadget.zero_tests[0];
    assert_eq!(site.states.len(), 6);
    assert_eq!(gadget.vass.states.len(), 7);
    // Chain order: tested counter first, then the remaining guards, then b.
    let loops: Vec<&[BigInt]> = gadget
        .vass
        .transitions
        .iter()
        .filter(|t| t.src == t.dst)
        .map(|t| t.effect.as_slice())
        .collect();
    assert_eq!(loops[0], eff(&[-1, 1, 0, 0, 0, -1]).as_slice()); // x -> y
    assert_eq!(loops[1], eff(&[1, 0, -1, 0, 0, -1]).as_slice()); // z -> x
    assert_eq!(loops[2], eff(&[0, 0, 1, -1, 0, -1]).as_slice()); // b -> z
    assert_eq!(loops[3], eff(&[0, 0, -1, 1, 0, -1]).as_slice()); // z -> b
    assert_eq!(loops[4], eff(&[-1, 0, 1, 0, 0, -1]).as_slice()); // x -> z
    assert_eq!(loops[5], eff(&[1, -1, 0, 0, 0, -1]).as_slice()); // y -> x
    assert!(gadget.zero_test_invariants_ok());
}

#[test]
fn guarded_adds_are_compensated_on_the_bound() {
    let text = "counter x y b c d\ntriple b c d guards x y\nadd x 3\nadd y -1\n";
    let program = parse_program("comp", text).unwrap();
    let gadget = compile(&program).unwrap();
    assert_eq!(gadget.vass.transitions.len(), 2);
    assert_eq!(gadget.vass.transitions[0].effect, eff(&[3, 0, -3, 0, 0]));
    assert_eq!(gadget.vass.transitions[1].effect, eff(&[0, -1, 1, 0, 0]));
}

#[test]
fn consecutive_loops_get_separate_anchors() {
    let text = "counter x\nloop\n  add x 1\nend\nloop\n  add x -1\nend\n";
    let program = parse_program("two", text).unwrap();
    let gadget = compile(&program).unwrap();
    assert_eq!(gadget.vass.states.len(), 2);
    assert_eq!(gadget.vass.transitions.len(), 3);
    assert_eq!(geometric_dimension(&gadget.vass), 1);
    assert_eq!(scc_dimension(&gadget.vass), 1);
}

#[test]
fn scripts_expand_and_replay() {
    let text = "counter x y\nloop\n  loop\n    add x 1\n  end\n  add y 1\nend\n";
    let program = parse_program("nest", text).unwrap();
    let gadget = compile(&program).unwrap();
    // Both cycles share the single control point; iteration boundaries are
    // the y increments.
    assert_eq!(gadget.vass.states.len(), 1);
    assert_eq!(gadget.vass.transitions.len(), 2);

    // Counts are consumed per loop entry: outer, then inner again for every
    // outer iteration.
    let steps = gadget.scripted_run(&[2, 3, 4]).unwrap();
    assert_eq!(steps.len(), 9);
    let run = Run::replay(
        &gadget.vass,
        &gadget.source.to_z(),
        &steps,
        Semantics::Nonnegative,
    )
    .unwrap();
    assert_eq!(run.end().state, gadget.exit);
    assert_eq!(run.end().values, eff(&[7, 2]));

    assert!(gadget.scripted_run(&[2, 3]).is_none(), "script too short");
    assert!(
        gadget.scripted_run(&[2, 3, 4, 1]).is_none(),
        "script too long"
    );
}

#[test]
fn straight_line_walks_replay_without_counts() {
    let program = parse_program("line", "counter x\nadd x 1\nadd x 2\n").unwrap();
    let gadget = compile(&program).unwrap();
    assert!(gadget
        .walk
        .iter()
        .all(|item| matches!(item, WalkItem::Forward(_))));
    let steps = gadget.scripted_run(&[]).unwrap();
    let run = Run::replay(
        &gadget.vass,
        &gadget.source.to_z(),
        &steps,
        Semantics::Nonnegative,
    )
    .unwrap();
    assert_eq!(run.end().state, gadget.exit);
    assert_eq!(run.end().values, eff(&[3]));
}

#[test]
fn mirror_pairs_copy_every_effect_and_keep_dimension() {
    let mirrored = parse_program(
        "twin",
        "counter x y\npair x y\nloop\n  add x 1\nend\nadd x -2\n",
    )
    .unwrap();
    let gadget = compile(&mirrored).unwrap();
    assert!(gadget.mirrors_ok());
    assert_eq!(gadget.vass.transitions[0].effect, eff(&[1, 1]));
    assert_eq!(gadget.vass.transitions[1].effect, eff(&[-2, -2]));

    let plain = parse_program("solo", "counter x\nloop\n  add x 1\nend\nadd x -2\n").unwrap();
    let without = compile(&plain).unwrap();
    assert_eq!(
        scc_dimension(&gadget.vass),
        scc_dimension(&without.vass),
        "duplicating a counter must not change the dimension"
    );
    assert_eq!(
        geometric_dimension(&gadget.vass),
        geometric_dimension(&without.vass)
    );
}

#[test]
fn universe_compilation_places_coordinates() {
    let program = parse_program("part", "counter x\nadd x 5\n").unwrap();
    let universe = strings(&["a", "x", "b"]);
    let gadget = compile_with_universe(&program, &universe).unwrap();
    assert_eq!(gadget.vass.dim, 3);
    assert_eq!(gadget.vass.transitions[0].effect, eff(&[0, 5, 0]));
    assert_eq!(gadget.counter_index("x"), Some(1));

    let missing = strings(&["a", "b"]);
    assert!(matches!(
        compile_with_universe(&program, &missing).unwrap_err(),
        GadgetError::UndeclaredCounter(n) if n == "x"
    ));
    let doubled = strings(&["x", "x"]);
    assert!(matches!(
        compile_with_universe(&program, &doubled).unwrap_err(),
        GadgetError::DuplicateCounter(_)
    ));
}
