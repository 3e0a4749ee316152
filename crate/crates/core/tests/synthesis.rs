use gf2m_synth::field::{find_gnb_type, FieldSpec, GhostBitField};
use gf2m_synth::synth::{
    cancel_pairs, synth_add, synth_gbb_mult, synth_gbb_self_mult, synth_gnb_mult, synth_gnb_self_mult, ScheduledCircuit,
};
use gf2m_synth::verify::{verify_circuit, Mode, Operation};
use gf2m_synth::{Bits, Circuit};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ghost_degrees() -> Vec<usize> {
    (2..=64).filter(|&m| GhostBitField::new(m).is_ok()).collect()
}

fn gnb_degrees() -> Vec<usize> {
    (2..=64).filter(|&m| find_gnb_type(m).is_ok()).chain([163, 233]).collect()
}

fn assert_layering(s: &ScheduledCircuit, bound: usize, what: &str) {
    assert!(s.schedule.is_valid_for(&s.circuit), "{what}: color classes overlap");
    let greedy = s.circuit.depth().depth;
    let intended = s.schedule.intended_depth();
    assert!(greedy <= intended && intended <= bound, "{what}: {greedy} <= {intended} <= {bound}");
}

fn run(circuit: &Circuit, regs: &[&Bits]) -> Bits {
    let input: Vec<bool> = regs.iter().flat_map(|b| b.iter().copied()).collect();
    circuit.simulate(&input).unwrap()
}

#[test]
fn ghost_bit_multipliers_meet_counts_and_depth() {
    for m in ghost_degrees() {
        let n = m + 1;
        let s = synth_gbb_mult(m).unwrap();
        assert_eq!(s.circuit.toffoli_count(), n * n);
        assert_eq!(s.circuit.width(), 3 * n);
        assert_layering(&s, n, &format!("gbb mult m={m}"));

        for r in 0..=m {
            let s = synth_gbb_self_mult(m, r).unwrap();
            if r == 0 || r == m {
                assert_eq!((s.circuit.toffoli_count(), s.circuit.cnot_count()), (0, n));
                assert_layering(&s, 1, &format!("gbb square m={m}"));
            } else {
                assert_eq!((s.circuit.toffoli_count(), s.circuit.cnot_count()), (m * m + m, n));
                assert!(s.schedule.max_colors() <= 2);
                assert_layering(&s, 2 * m + 2, &format!("gbb selfmult m={m} r={r}"));
            }
        }
    }
}

#[test]
fn gnb_multipliers_meet_counts_and_depth() {
    for m in gnb_degrees() {
        let params = find_gnb_type(m).unwrap();
        let tt = params.cost_factor();
        let s = synth_gnb_mult(&params).unwrap();
        assert_eq!(s.circuit.toffoli_count(), tt * m * m - m, "m = {m}");
        assert_layering(&s, tt * m - 1, &format!("gnb mult m={m}"));

        let rs: Vec<usize> = if m <= 64 { (0..=m).collect() } else { vec![0, 1, m / 2, m] };
        for r in rs {
            let s = synth_gnb_self_mult(&params, r).unwrap();
            assert_eq!(s.circuit.len(), tt * m * m - m);
            assert!(s.schedule.max_colors() <= 3);
            assert_layering(&s, 3 * tt * m - 3, &format!("gnb selfmult m={m} r={r}"));
        }
    }
}

#[test]
fn adders() {
    for w in 1..20 {
        let c = synth_add(w).unwrap();
        assert_eq!((c.cnot_count(), c.depth().depth, c.width()), (w, 1, 2 * w));
    }
    let c = synth_add(4).unwrap();
    for v in 0..16 {
        let a = Bits::from_u64(v, 4);
        let state = run(&c, &[&a, &Bits::zeros(4)]);
        assert_eq!(&state[..4], &a[..]);
        assert_eq!(&state[4..], &a[..]);
    }
}

#[test]
fn ghost_bit_output_accumulates() {
    let field = GhostBitField::new(10).unwrap();
    let c = synth_gbb_mult(10).unwrap().circuit;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let (a, b, xi) = (Bits::random(11, &mut rng), Bits::random(11, &mut rng), Bits::random(11, &mut rng));
        let state = run(&c, &[&a, &b, &xi]);
        let expected = &field.mult(&a, &b).unwrap() ^ &xi;
        assert_eq!(&state[22..], &expected[..]);
        assert_eq!(&state[..22], &run(&Circuit::new(22), &[&a, &b])[..]);
    }
}

#[test]
fn gnb_identity_operand() {
    let params = find_gnb_type(5).unwrap();
    let c = synth_gnb_mult(&params).unwrap().circuit;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let (a, xi) = (Bits::random(5, &mut rng), Bits::random(5, &mut rng));
        let state = run(&c, &[&a, &params.one(), &xi]);
        assert_eq!(&state[10..], &(&a ^ &xi)[..]);
    }
}

#[test]
fn gnb_self_power_exhaustive_m5() {
    let spec = FieldSpec::gnb(5).unwrap();
    let FieldSpec::Gnb(params) = &spec else { unreachable!() };
    for r in 0..=5 {
        let c = synth_gnb_self_mult(params, r).unwrap().circuit;
        for v in 0..32 {
            let a = Bits::from_u64(v, 5);
            let state = run(&c, &[&a, &Bits::zeros(5)]);
            let expected = params.mult(&a, &params.frobenius(&a, r).unwrap()).unwrap();
            assert_eq!(&state[5..], &expected[..], "r = {r}, a = {a}");
        }
    }
}

#[test]
fn cancellation_in_worked_example() {
    let spec = FieldSpec::gnb(5).unwrap();
    let FieldSpec::Gnb(params) = &spec else { unreachable!() };
    let c = synth_gnb_self_mult(params, 1).unwrap().circuit;
    let reduced = cancel_pairs(&c);
    // The k = 1 and k = 4 families both compute a_{1+i} a_{4+i}.
    assert_eq!(c.len() - reduced.len(), 10);
    let report = verify_circuit(&reduced, &spec, Operation::SelfMult { r: 1 }, Mode::Exhaustive).unwrap();
    assert!(report.passed(), "{report}");
    assert!(reduced.resources().depth <= c.resources().depth);
}

#[test]
fn oracle_equivalence_at_scale() {
    let spec = FieldSpec::ghost_bit(10).unwrap();
    let c = synth_gbb_self_mult(10, 3).unwrap().circuit;
    assert!(verify_circuit(&c, &spec, Operation::SelfMult { r: 3 }, Mode::default()).unwrap().passed());
    for m in [163usize, 233] {
        let spec = FieldSpec::gnb(m).unwrap();
        let FieldSpec::Gnb(params) = &spec else { unreachable!() };
        let c = synth_gnb_mult(params).unwrap().circuit;
        assert!(verify_circuit(&c, &spec, Operation::Mult, Mode::default()).unwrap().passed());
        let c = synth_gnb_self_mult(params, 2).unwrap().circuit;
        assert!(verify_circuit(&c, &spec, Operation::SelfMult { r: 2 }, Mode::default()).unwrap().passed());
    }
}
