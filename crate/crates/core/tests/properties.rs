//! Cross-cutting invariants of the information constructors and the
//! verifier, exhaustive at desk scale.

use assort_core::*;

fn universe(n: usize, l: usize) -> Universe {
    Universe::build(&TypeSpace::with_len(l), n).unwrap()
}

fn mech(announcer: Announcer, n: usize) -> MechanismSpec {
    MechanismSpec::with_identity(announcer, n, Regime::Injective)
}

fn improving_deviations(u: &Universe) -> Vec<(TypeAssignment, WorkerId, WorkerType)> {
    let mut out = Vec::new();
    for w in u.assignments() {
        for j in u.worker_ids() {
            for t in u.types() {
                if t <= w.type_of(j) || w.types().contains(&t) {
                    continue;
                }
                out.push((w.clone(), j, t));
            }
        }
    }
    out
}

/// Richer payloads never enlarge the built set relative to the minimal one,
/// the public payload never enlarges it relative to the lower-contour one,
/// and at the deviator's own firm the full informativeness chain holds:
/// public within lower-contour within matched-report within minimal.
///
/// The chain is restricted to the deviator's firm because the matched-report
/// constructor reasons over whole report profiles and can out-refine the
/// lower-contour constructor at firms whose own match reported truthfully.
#[test]
fn information_monotonicity() {
    for l in [4usize, 5] {
        let u = universe(3, l);
        let mi = mech(Announcer::InformativePublic, 3);
        let ml = mech(Announcer::LowerContour, 3);
        let md = mech(Announcer::MatchedReport, 3);
        for (w, j, t) in improving_deviations(&u) {
            let si = deviation_state(&mi, &InfoPolicy::Rationalizable, &u, &w, j, t)
                .unwrap()
                .1;
            let sl = deviation_state(&ml, &InfoPolicy::Rationalizable, &u, &w, j, t)
                .unwrap()
                .1;
            let sd = deviation_state(&md, &InfoPolicy::Rationalizable, &u, &w, j, t)
                .unwrap()
                .1;
            let sm = deviation_state(&mi, &InfoPolicy::Minimal, &u, &w, j, t)
                .unwrap()
                .1;
            let deviator_firm = sd.matching.firm_of(j).unwrap();
            for i in u.firm_ids() {
                let (a, b, c, m) = (
                    &si.firm_info[i.index()],
                    &sl.firm_info[i.index()],
                    &sd.firm_info[i.index()],
                    &sm.firm_info[i.index()],
                );
                assert!(
                    a.is_subset_of(b),
                    "public !<= lower_contour at {w} {j} {t} {i}"
                );
                assert!(
                    b.is_subset_of(m),
                    "lower_contour !<= minimal at {w} {j} {t} {i}"
                );
                assert!(
                    c.is_subset_of(m),
                    "matched_report !<= minimal at {w} {j} {t} {i}"
                );
                if i == deviator_firm {
                    assert!(
                        b.is_subset_of(c),
                        "lower_contour !<= matched_report at the deviator's firm: {w} {j} {t} {i}"
                    );
                }
            }
        }
    }
}

/// A deviation blocked under the matched-report announcer stays blocked
/// under the lower-contour announcer, and one blocked there stays blocked
/// under the public announcer.
#[test]
fn verdict_richness_monotonicity() {
    for l in [4usize, 5] {
        let u = universe(3, l);
        let md = mech(Announcer::MatchedReport, 3);
        let ml = mech(Announcer::LowerContour, 3);
        let mi = mech(Announcer::InformativePublic, 3);
        let blocked = |o: &Outcome| matches!(o, Outcome::Blocked(_, _));
        for (w, j, t) in improving_deviations(&u) {
            let vd = evaluate_misreport(&md, &InfoPolicy::Rationalizable, &u, &w, j, t).unwrap();
            let vl = evaluate_misreport(&ml, &InfoPolicy::Rationalizable, &u, &w, j, t).unwrap();
            let vi = evaluate_misreport(&mi, &InfoPolicy::Rationalizable, &u, &w, j, t).unwrap();
            if blocked(&vd.outcome) {
                assert!(blocked(&vl.outcome), "at {w} {j} {t}");
            }
            if blocked(&vl.outcome) {
                assert!(blocked(&vi.outcome), "at {w} {j} {t}");
            }
        }
    }
}

/// The payoff-relevance bound holds for the rational policies under every
/// announcer, and fails for the minimal policy exactly when a detecting
/// announcer leaves the consistency set unrefined.
#[test]
fn nontrivial_updating_bound() {
    let u = universe(3, 4);
    for announcer in [
        Announcer::Empty,
        Announcer::InformativePublic,
        Announcer::LowerContour,
        Announcer::MatchedReport,
    ] {
        let m = mech(announcer, 3);
        for policy in [InfoPolicy::NontrivialOnly, InfoPolicy::Rationalizable] {
            let nt = check_assumption_nt(&policy, &m, &u).unwrap();
            assert!(
                nt.holds(),
                "{announcer} under {policy} must satisfy the bound"
            );
        }
    }
    // empty announcements never trigger the bound
    let nt = check_assumption_nt(&InfoPolicy::Minimal, &mech(Announcer::Empty, 3), &u).unwrap();
    assert!(nt.holds());
    // public announcements with unrefined beliefs violate it
    let nt = check_assumption_nt(
        &InfoPolicy::Minimal,
        &mech(Announcer::InformativePublic, 3),
        &u,
    )
    .unwrap();
    assert!(!nt.holds());
}

/// The public-report and lower-contour mechanisms agree (both certified) on
/// every desk-scale market tested.
#[test]
fn public_and_lower_contour_agree() {
    for n in 2..=3usize {
        for l in (n + 1)..=(n + 2) {
            let u = universe(n, l);
            let a = verify_ic(
                &mech(Announcer::InformativePublic, n),
                &InfoPolicy::Rationalizable,
                &u,
            )
            .unwrap();
            let b = verify_lower_contour(
                &u,
                &InfoPolicy::Rationalizable,
                TieBreak::identity(n),
                Regime::Injective,
            )
            .unwrap();
            assert!(a.certification.is_certified());
            assert!(b.certification.is_certified());
        }
    }
}

/// Shrinking a firm's information set never turns an existing block off.
#[test]
fn blocks_are_monotone_under_information_shrinking() {
    let u = universe(3, 5);
    let m = mech(Announcer::InformativePublic, 3);
    for (w, j, t) in improving_deviations(&u) {
        let (verdict, state) =
            deviation_state(&m, &InfoPolicy::NontrivialOnly, &u, &w, j, t).unwrap();
        let Outcome::Blocked(firm, worker) = verdict.outcome else {
            continue;
        };
        // drop every other candidate except the truth
        let truth = u.id_of(&w).unwrap() as usize;
        let mut shrunk = state.clone();
        shrunk.firm_info[firm.index()] = IndexSet::from_indices(u.len(), [truth]);
        assert!(blocks(firm, worker, &shrunk, &u), "at {w} {j} {t}");
    }
}

/// The verifier's verdict classification and the position/swap table agree:
/// a mechanism is certified exactly when no table cell is manipulable.
#[test]
fn certification_matches_the_position_swap_table() {
    for (announcer, policy, l) in [
        (Announcer::Empty, InfoPolicy::Minimal, 4usize),
        (Announcer::InformativePublic, InfoPolicy::Rationalizable, 5),
        (Announcer::MatchedReport, InfoPolicy::Rationalizable, 7),
    ] {
        let u = universe(3, l);
        let m = mech(announcer, 3);
        let run = verify_ic(&m, &policy, &u).unwrap();
        let table = position_swap_report(&m, &policy, &u).unwrap();
        let any_manipulable = table.iter().any(|cell| cell.manipulable);
        assert_eq!(run.certification.is_certified(), !any_manipulable);
        for cell in table {
            if let Some(witness) = cell.witness {
                assert_eq!(witness.outcome, Outcome::Successful);
                assert_eq!(
                    position(&witness.assignment, witness.deviator).unwrap(),
                    cell.position
                );
                assert_eq!(
                    swap_count(&witness.assignment, witness.deviator, witness.report).unwrap(),
                    cell.swaps
                );
            }
        }
    }
}
