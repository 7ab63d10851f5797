//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quadmon::artin_schreier::{
    fiber_report, fiber_reports, predicted_orbit_count, with_basis_orbit_count,
};
use quadmon::disc::{disc_classes, disc_hom_check_with, form_is_cancellative, is_discriminant};
use quadmon::monoid::grothendieck_group;
use quadmon::quad::classify;
use quadmon::symbolic::{verify_all, CATALOGUE};
use quadmon::{AsGroup, DiscClass, QuadAlg, Rank1Form, Ring, RingSpec};

const IDENTITY_TIME_LIMIT: Duration = Duration::from_secs(1);
const MONOID_TIME_LIMIT: Duration = Duration::from_secs(60);
const INTEGER_DISC_BOUND: i64 = 1000;
const INTEGER_ISO_BOUND: i64 = 100;
const KUMMER_PAIRS: usize = 50;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tested_rings() -> Vec<Ring> {
    let mut specs: Vec<String> = (2..=16).map(|n| format!("Z/{n}")).collect();
    specs.extend(["Z/2[x]/(x^2+x+1)", "Z/2[x]/(x^2)", "Z/4[x]/(x^2)"].map(String::from));
    specs
        .iter()
        .map(|s| Ring::parse(s).expect("ring spec"))
        .collect()
}

/// Orbits of `(t, n) -> (u(t + 2r), u^2(n + tr + r^2))` on `(Z/k)^2`, with
/// plain integer arithmetic. Returns the orbit sizes keyed by least member.
fn integer_orbits(k: u64) -> BTreeMap<(u64, u64), usize> {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let units: Vec<u64> = (0..k).filter(|&u| gcd(u, k) == 1).collect();
    let mut seen = BTreeSet::new();
    let mut orbits = BTreeMap::new();
    for t in 0..k {
        for n in 0..k {
            if seen.contains(&(t, n)) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for &u in &units {
                for r in 0..k {
                    let t2 = u * (t + 2 * r) % k;
                    let n2 = u * u % k * ((n + t * r + r * r) % k) % k;
                    orbit.insert((t2, n2));
                }
            }
            seen.extend(orbit.iter().copied());
            orbits.insert(*orbit.iter().next().expect("nonempty"), orbit.len());
        }
    }
    orbits
}

fn fiber_sizes(ring: &Ring) -> Result<Vec<(String, usize)>, String> {
    let cls = classify(ring).map_err(|e| e.to_string())?;
    let discs = disc_classes(ring).map_err(|e| e.to_string())?;
    let report = disc_hom_check_with(&cls, &discs).map_err(|e| e.to_string())?;
    Ok(report
        .fibers
        .into_iter()
        .map(|f| (f.d, f.classes))
        .collect())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let reports = verify_all();
    let elapsed = start.elapsed();
    ensure(reports.len() == CATALOGUE.len(), || {
        "catalogue incomplete".into()
    })?;
    for r in &reports {
        ensure(r.holds, || format!("{} does not hold", r.name))?;
    }
    ensure(elapsed < IDENTITY_TIME_LIMIT, || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} identities exact in {elapsed:?}", reports.len()))
}

fn small_field_case(
    spec: &str,
    classes: usize,
    fibers: &[(&str, usize)],
) -> Result<(Ring, AsGroup), String> {
    let ring = Ring::parse(spec).map_err(|e| e.to_string())?;
    let cls = classify(&ring).map_err(|e| e.to_string())?;
    ensure(cls.len() == classes, || {
        format!("{spec}: {} classes", cls.len())
    })?;
    let oracle = integer_orbits(ring.size().expect("finite") as u64);
    let ours: BTreeMap<(u64, u64), usize> = cls
        .classes()
        .iter()
        .map(|c| {
            let v = |e: &quadmon::RingElement| e.to_string().parse::<u64>().expect("residue");
            ((v(c.rep.t()), v(c.rep.n())), c.orbit_size)
        })
        .collect();
    ensure(ours == oracle, || {
        format!("{spec}: orbits differ from enumeration oracle")
    })?;
    let got = fiber_sizes(&ring)?;
    let want: Vec<(String, usize)> = fibers.iter().map(|(d, k)| (d.to_string(), *k)).collect();
    ensure(got == want, || format!("{spec}: fibers {got:?}"))?;
    let group = AsGroup::new(&ring).map_err(|e| e.to_string())?;
    ensure(group.order() == 2, || {
        format!("{spec}: |AS| = {}", group.order())
    })?;
    Ok((ring, group))
}

fn criterion_2() -> Outcome {
    let (ring, group) = small_field_case("Z/2", 3, &[("0", 1), ("1", 2)])?;
    let cls = classify(&ring).map_err(|e| e.to_string())?;
    let dc = DiscClass::of(ring.one()).map_err(|e| e.to_string())?;
    let rep = fiber_report(&cls, &group, &dc).map_err(|e| e.to_string())?;
    ensure(rep.free && rep.transitive, || {
        "AS(F2) not simply transitive on d=1".into()
    })?;
    Ok("3 classes, fibers {0:1, 1:2}, AS = Z/2 simply transitive on d=1".into())
}

fn criterion_3() -> Outcome {
    let (ring, group) = small_field_case("Z/4", 6, &[("0", 4), ("1", 2)])?;
    let wp: Vec<String> = group.wp4().iter().map(|e| e.to_string()).collect();
    ensure(wp == ["0", "2"], || format!("wp(R)[4] = {wp:?}"))?;
    let cls = classify(&ring).map_err(|e| e.to_string())?;
    let one = DiscClass::of(ring.one()).map_err(|e| e.to_string())?;
    let rep = fiber_report(&cls, &group, &one).map_err(|e| e.to_string())?;
    ensure(rep.free && rep.transitive, || {
        "not simply transitive on d=1".into()
    })?;
    let zero = DiscClass::of(ring.zero()).map_err(|e| e.to_string())?;
    let rep = fiber_report(&cls, &group, &zero).map_err(|e| e.to_string())?;
    ensure(rep.orbits.iter().all(|o| o.len() == 1), || {
        "nontrivial action on d=0".into()
    })?;
    ensure(rep.kernel_size == group.order(), || {
        "kernel on d=0 is not all of AS".into()
    })?;
    let ann: BTreeSet<&String> = rep.ann_d4_image.iter().collect();
    let kernel: BTreeSet<&String> = rep.kernel.iter().collect();
    ensure(ann == kernel, || {
        "kernel on d=0 differs from the image of ann(0)[4]".into()
    })?;
    Ok("6 classes, fibers {0:4, 1:2}, wp(R)[4] = {0,2}, trivial on d=0".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let rings = tested_rings();
    for ring in &rings {
        let cls = classify(ring).map_err(|e| format!("{ring}: {e}"))?;
        let m = cls.monoid().map_err(|e| format!("{ring}: {e}"))?;
        m.validate().map_err(|e| format!("{ring}: {e}"))?;
        cls.check_product_well_defined()
            .map_err(|e| format!("{ring}: {e}"))?;
        ensure(m.identity == cls.class_of(&QuadAlg::identity(ring)), || {
            format!("{ring}: identity")
        })?;
        ensure(
            m.find_absorbing() == Some(cls.class_of(&QuadAlg::absorbing(ring))),
            || format!("{ring}: absorbing"),
        )?;
        if let RingSpec::Mod(k) = ring.spec() {
            let oracle = integer_orbits(*k);
            ensure(oracle.len() == cls.len(), || {
                format!("{ring}: class count vs oracle")
            })?;
        }
        let discs = disc_classes(ring).map_err(|e| format!("{ring}: {e}"))?;
        let report = disc_hom_check_with(&cls, &discs).map_err(|e| format!("{ring}: {e}"))?;
        ensure(report.is_ok(), || {
            format!("{ring}: {:?}", report.violations)
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < MONOID_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} rings in {elapsed:?}", rings.len()))
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for ring in tested_rings() {
        for d in ring.elements().map_err(|e| e.to_string())? {
            let got = with_basis_orbit_count(&ring, &d).map_err(|e| e.to_string())?;
            let want = predicted_orbit_count(&ring, &d).map_err(|e| e.to_string())?;
            ensure(got == want, || {
                format!("{ring}, d={d}: {got} orbits, predicted {want}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (R, d) pairs"))
}

fn criterion_6() -> Outcome {
    let mut fibers = 0;
    let mut sec_classes = 0;
    for ring in tested_rings() {
        for rep in fiber_reports(&ring).map_err(|e| format!("{ring}: {e}"))? {
            ensure(rep.free_on_sec, || {
                format!("{ring}, d={}: not free on sec classes", rep.d)
            })?;
            fibers += 1;
            sec_classes += rep.sec.iter().filter(|s| **s).count();
        }
    }
    Ok(format!("{fibers} fibers, {sec_classes} sec classes"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for ring in tested_rings() {
        for a in ring.elements().map_err(|e| e.to_string())? {
            let canc = form_is_cancellative(&ring, &Rank1Form::new(a.clone()))
                .map_err(|e| e.to_string())?;
            ensure(canc == ring.is_nonzerodivisor(&a), || {
                format!("{ring}, a={a}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} elements"))
}

fn criterion_8() -> Outcome {
    let rings = tested_rings();
    for ring in &rings {
        let m = classify(ring)
            .and_then(|c| c.monoid())
            .map_err(|e| e.to_string())?;
        ensure(grothendieck_group(&m).is_trivial(), || {
            format!("{ring}: K0 nontrivial")
        })?;
    }
    Ok(format!("{} rings", rings.len()))
}

fn criterion_9() -> Outcome {
    let z = Ring::integers();
    for d in -INTEGER_DISC_BOUND..=INTEGER_DISC_BOUND {
        let got = is_discriminant(&z, &z.from_int(d))
            .map_err(|e| e.to_string())?
            .is_some();
        ensure(got == matches!(d.rem_euclid(4), 0 | 1), || {
            format!("is_discriminant({d})")
        })?;
    }
    let reps: Vec<(i64, QuadAlg)> = (-INTEGER_ISO_BOUND..=INTEGER_ISO_BOUND)
        .filter(|d| matches!(d.rem_euclid(4), 0 | 1))
        .map(|d| QuadAlg::integral_with_disc(&BigInt::from(d)).map(|s| (d, s)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for (d, s) in &reps {
        ensure(s.disc() == z.from_int(*d), || format!("disc S({d})"))?;
    }
    for (i, (d, s)) in reps.iter().enumerate() {
        for (e, t) in &reps[i + 1..] {
            let iso = s.is_isomorphic(t).map_err(|e| e.to_string())?;
            ensure(!iso, || format!("S({d}) ≅ S({e})"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..KUMMER_PAIRS {
        let (n, m): (i64, i64) = (
            rng.gen_range(-1_000_000..=1_000_000),
            rng.gen_range(-1_000_000..=1_000_000),
        );
        let got = QuadAlg::from_ints(&z, 0, -n)
            .star(&QuadAlg::from_ints(&z, 0, -m))
            .map_err(|e| e.to_string())?;
        let want = QuadAlg::new(z.zero(), z.from_bigint(&(BigInt::from(-4) * n * m)))
            .map_err(|e| e.to_string())?;
        ensure(got == want, || format!("(0,{})*(0,{}) = {got}", -n, -m))?;
    }
    Ok(format!(
        "{} discriminants, {} pairwise non-isomorphic S(d), {KUMMER_PAIRS} Kummer products",
        2 * INTEGER_DISC_BOUND + 1,
        reps.len()
    ))
}

fn criterion_10() -> Outcome {
    let mut checked = 0;
    for ring in tested_rings() {
        let cls = classify(&ring).map_err(|e| e.to_string())?;
        let identity = cls.identity_class();
        for (k, c) in cls.classes().iter().enumerate() {
            if !c.separable {
                continue;
            }
            for s in cls.members(k) {
                let sq = s.star(&s).map_err(|e| e.to_string())?;
                ensure(cls.class_of(&sq) == identity, || {
                    format!("{ring}: {s} * {s} = {sq}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} separable algebras"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("identity catalogue", criterion_1),
        ("F2 classification and AS action", criterion_2),
        ("Z/4 classification and AS action", criterion_3),
        ("monoid laws and disc homomorphism", criterion_4),
        ("with-basis orbit indexing", criterion_5),
        ("AS freeness on sec classes", criterion_6),
        ("cancellative iff semi-nondegenerate", criterion_7),
        ("K0 triviality", criterion_8),
        ("integer special cases", criterion_9),
        ("separable square law", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
