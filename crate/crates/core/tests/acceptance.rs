//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero when any fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use leibkit::algebra::LeibnizAlgebra;
use leibkit::catalog::{self, CyclicSpec, Lcg};
use leibkit::completeness::{check_nilpotent_incompleteness, check_prop_3_2, is_complete};
use leibkit::derivation::{all_derivations_inner, derivation_basis, is_characteristic_ideal, is_derivation, DerivationBasis};
use leibkit::holomorph::{build_holomorph, build_holomorph_with, decomposition_check};
use leibkit::io::{emit_algebra_string, parse_algebra_str};
use leibkit::radical::{
    characteristically_simple, crad, crad_quotient_residual, line_count, nilradical, radical, semisimplicity_flags,
    verify_completely_semisimple, verify_nilradical_candidate, verify_radical_candidate, SuiteConfig, Supplied,
};
use leibkit::{FieldSpec, Matrix, Subspace, Vector};

const AC1_BUDGET: Duration = Duration::from_secs(5);
const AC3_BUDGET: Duration = Duration::from_secs(10);
const BASIS_CHANGES_PER_ENTRY: u64 = 20;
const RANDOM_MATRICES_PER_FIELD: usize = 1000;
const KERNEL_FIELDS: [FieldSpec; 4] = [
    FieldSpec::Rationals,
    FieldSpec::PrimeField { p: 3 },
    FieldSpec::PrimeField { p: 5 },
    FieldSpec::PrimeField { p: 2_147_483_647 },
];
const KERNEL_SEED: u64 = 8_675_309;

/// Title and body of one criterion.
type Criterion = (&'static str, fn(&mut Failures));

/// Failed sub-checks of one criterion.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn flat_span(field: FieldSpec, n: usize, mats: &[Matrix]) -> Subspace {
    Subspace::span(field, n * n, mats.iter().map(|m| m.as_flat().to_vec())).unwrap()
}

fn span_i64(field: FieldSpec, n: usize, rows: &[&[i64]]) -> Subspace {
    Subspace::span(field, n, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect::<Vector>())).unwrap()
}

fn cyclic_derivations(f: &mut Failures) {
    let start = Instant::now();
    for n in 2..=6 {
        let spec = CyclicSpec::nilpotent(n, q()).unwrap();
        let mut specs = vec![(spec, n)];
        specs.extend(catalog::cyclic_sweep(n, q()).into_iter().map(|s| (s, n - 1)));
        for (spec, expected) in specs {
            let a = catalog::make_cyclic(&spec).unwrap();
            let der = derivation_basis(&a);
            let listed = catalog::expected_cyclic_der(&spec);
            f.check(der.dim() == expected, || {
                format!("n={n} k={:?}: dim Der = {}, expected {expected}", spec.coeffs, der.dim())
            });
            f.check(listed.iter().all(|m| is_derivation(&a, m).unwrap()), || {
                format!("n={n} k={:?}: a closed-form matrix is not a derivation", spec.coeffs)
            });
            f.check(&flat_span(q(), n, &listed) == der.flat_space(), || {
                format!("n={n} k={:?}: closed-form span differs from the computed Der", spec.coeffs)
            });
        }
    }
    let took = start.elapsed();
    f.check(took < AC1_BUDGET, || format!("took {took:?}, budget {AC1_BUDGET:?}"));
}

fn example_reproduction(f: &mut Failures) {
    let a = catalog::example_3_8();
    let der = derivation_basis(&a);
    f.check(der.dim() == 4, || format!("dim Der = {}", der.dim()));
    let table = catalog::example_3_8_derivations();
    f.check(&flat_span(q(), 4, &table) == der.flat_space(), || "Der differs from the listed δ1..δ4".into());
    f.check(all_derivations_inner(&a, &der), || "some derivation is outer".into());
    let r = is_complete(&a);
    f.check(!r.complete, || "reported complete".into());
    f.check(r.quotient_center_dim == 1, || format!("quotient center dim {}", r.quotient_center_dim));
    f.check(a.leib_ideal() == Subspace::coordinate(q(), 4, &[3]), || {
        format!("Leib = {}", a.format_subspace(&a.leib_ideal()))
    });
    let s = a.series_profile();
    f.check(s.nilpotency_class == Some(3), || format!("nilpotency class {:?}", s.nilpotency_class));
    f.check(s.lower_central.get(3).is_some_and(Subspace::is_zero), || "A⁴ ≠ 0".into());
    f.check(s.lower_central.get(2).is_some_and(|t| !t.is_zero()), || "A³ = 0".into());
}

fn current_algebra(f: &mut Failures) {
    let start = Instant::now();
    let p = 5u64;
    let cur = catalog::current_sl2(p).unwrap();
    let m = &cur.algebra;
    f.check(is_derivation(m, &cur.delta).unwrap(), || "1⊗d/dx is not a derivation".into());
    f.check(m.is_ideal(&cur.ln).unwrap(), || "L⊗N is not an ideal".into());
    f.check(!is_characteristic_ideal(m, &cur.ln).unwrap(), || "L⊗N is characteristic".into());
    let s = m.subspace_series(&cur.ln).unwrap();
    f.check(s.nilpotency_class == Some(p as usize - 1), || format!("class {:?}", s.nilpotency_class));
    let min_m = (0..).find(|&k| 1u64 << k >= p).unwrap();
    f.check(min_m == 3 && s.derived_length == Some(min_m), || {
        format!("derived length {:?}, expected {min_m}", s.derived_length)
    });
    f.check(line_count(p, 3) == Some(31), || "line count of F5^3 is not 31".into());
    let cfg = SuiteConfig::default();
    let rv = verify_radical_candidate(m, &cur.ln, &cfg).unwrap();
    f.check(rv.is_yes() && rv.certificate.contains("31 lines"), || format!("radical verdict {rv}"));
    let nv = verify_nilradical_candidate(m, &cur.ln, &cfg).unwrap();
    f.check(nv.is_yes() && nv.certificate.contains("31 lines"), || format!("nilradical verdict {nv}"));
    let (n, v) = nilradical(m, Some(&cur.ln), &cfg).unwrap();
    f.check(n == cur.ln && v.is_yes(), || format!("nilradical with supplied candidate: {v}"));
    let took = start.elapsed();
    f.check(took < AC3_BUDGET, || format!("took {took:?}, budget {AC3_BUDGET:?}"));
}

fn characteristic_left_center(f: &mut Failures) {
    for e in catalog::catalog() {
        for seed in 0..=BASIS_CHANGES_PER_ENTRY {
            let (a, _) = catalog::random_basis_change(&e.algebra, seed).unwrap();
            let der = derivation_basis(&a);
            let leib = a.leib_ideal();
            let lz = a.left_center();
            f.check(leib.is_subspace_of(&lz).unwrap(), || format!("{} seed {seed}: Leib ⊄ Z^l", e.name));
            for (k, d) in der.matrices().iter().enumerate() {
                f.check(leib.is_invariant_under(d).unwrap(), || format!("{} seed {seed}: D{} moves Leib", e.name, k + 1));
                f.check(lz.is_invariant_under(d).unwrap(), || format!("{} seed {seed}: D{} moves Z^l", e.name, k + 1));
            }
            f.check(a.is_ideal(&leib).unwrap() && a.is_ideal(&lz).unwrap(), || {
                format!("{} seed {seed}: Leib or Z^l is not an ideal", e.name)
            });
        }
    }
}

fn holomorph_structure(f: &mut Failures) {
    for e in catalog::catalog() {
        let a = &e.algebra;
        let h = build_holomorph(a).unwrap();
        f.check(h.algebra.check_identity().is_ok(), || format!("{}: hol fails the identity", e.name));
        let r = h.algebra.restrict(&h.a_space()).unwrap();
        f.check(r.tensor() == a.tensor(), || format!("{}: hol restricted to A differs from A", e.name));
        let dec = decomposition_check(&h).unwrap();
        f.check(dec.centralizer_is_graph, || format!("{}: Z ≠ {{x − L_x}} or dim Z ≠ n", e.name));
        f.check(dec.a_meet_z_equals_left_center, || format!("{}: A ∩ Z ≠ Z^l(A)", e.name));
        let comp = is_complete(a);
        if comp.complete {
            f.check(dec.holds(), || format!("{}: complete but the decomposition fails: {dec:?}", e.name));
        }
        if dec.sums_to_hol {
            f.check(comp.all_inner, || format!("{}: decomposition holds but an outer derivation exists", e.name));
        }
    }
    for name in ["sl2_Q", "hemi_sl2_natural", "hemi_sl2_adjoint"] {
        let e = catalog::catalog_entry(name).unwrap();
        f.check(is_complete(&e.algebra).complete, || format!("{name} is not complete"));
    }

    let a = catalog::example_3_8();
    let der = DerivationBasis::from_matrices(&a, catalog::example_3_8_derivations()).unwrap();
    let h = build_holomorph_with(&a, der).unwrap();
    let dec = decomposition_check(&h).unwrap();
    // Coordinates: w, x, y, z, δ1, δ2, δ3, δ4.
    let z = span_i64(
        q(),
        8,
        &[&[0, 0, 0, 1, 0, 0, 0, 0], &[1, 0, 0, 0, 0, 0, -1, 0], &[0, 1, 0, 0, 1, -1, 0, -1], &[0, 0, 1, 0, 0, 1, 0, 0]],
    );
    f.check(dec.z == z, || "example_3_8: Z differs from span{z, w−δ3, x+δ1−δ2−δ4, y+δ2}".into());
    f.check(dec.i == Subspace::coordinate(q(), 8, &[5, 7]), || "example_3_8: I ≠ span{δ2, δ4}".into());
    f.check(dec.sums_to_hol, || "example_3_8: A + Z + I ≠ hol".into());
    f.check(dec.z_meet_i_trivial, || "example_3_8: Z ∩ I ≠ 0".into());
    f.check(!is_complete(&a).complete, || "example_3_8 reported complete".into());
}

fn completeness_properties(f: &mut Failures) {
    for name in ["hemi_sl2_natural", "hemi_sl2_adjoint"] {
        let a = catalog::catalog_entry(name).unwrap().algebra;
        f.check(is_complete(&a).complete, || format!("{name} is not complete"));
    }
    for e in catalog::catalog() {
        let a = &e.algebra;
        if a.is_nilpotent() {
            let v = check_nilpotent_incompleteness(a).unwrap();
            f.check(v.is_yes(), || format!("{}: {v}", e.name));
        }
        let v = check_prop_3_2(a);
        f.check(v.is_yes(), || format!("{}: {v}", e.name));
        if !a.field().is_finite() && radical(a).unwrap() == a.leib_ideal() {
            f.check(is_complete(a).complete, || format!("{}: semisimple but not complete", e.name));
        }
    }
    for n in 2..=6 {
        let mut specs = vec![CyclicSpec::nilpotent(n, q()).unwrap()];
        specs.extend(catalog::cyclic_sweep(n, q()));
        for spec in specs {
            let a = catalog::make_cyclic(&spec).unwrap();
            f.check(!is_complete(&a).complete, || format!("cyclic n={n} k={:?} is complete", spec.coeffs));
        }
    }
}

fn hierarchy(f: &mut Failures) {
    let cfg = SuiteConfig::default();
    for e in catalog::catalog() {
        let a = &e.algebra;
        let der = derivation_basis(a);
        let cur = (e.name == "current_sl2_p5").then(|| catalog::current_sl2(5).unwrap());
        let supplied = cur.as_ref().map(|c| c.ln.clone());
        let profile = semisimplicity_flags(
            a,
            &der,
            &Supplied {
                radical: supplied.clone(),
                nilradical: supplied.clone(),
            },
            &cfg,
        )
        .unwrap();
        let Some(rad) = profile.radical.clone() else {
            f.check(false, || format!("{}: no radical available", e.name));
            continue;
        };
        let c = crad(a, &der, Some(&rad), &cfg).unwrap();
        let leib = a.leib_ideal();
        f.check(leib.is_subspace_of(&c.space).unwrap(), || format!("{}: Leib ⊄ Crad", e.name));
        f.check(der.is_characteristic_ideal(a, &c.space).unwrap(), || format!("{}: Crad not characteristic", e.name));
        f.check(c.trace.windows(2).all(|w| w[0] > w[1]), || format!("{}: fixpoint trace {:?}", e.name, c.trace));
        if e.name.starts_with("hemi_") {
            f.check(c.space == leib, || format!("{}: Crad ≠ Leib", e.name));
            f.check(profile.characteristically_semisimple == Some(true), || format!("{}: not char semisimple", e.name));
        }
        if a.is_solvable() {
            f.check(c.space.is_full(), || format!("{}: solvable but Crad ≠ A", e.name));
        }
        if cur.is_some() {
            f.check(c.space.is_zero(), || format!("current_sl2_p5: Crad has dim {}", c.space.dim()));
        }
        let residual = crad_quotient_residual(a, &der, Some(&rad), &cfg).unwrap();
        f.check(residual == 0, || format!("{}: Crad(A/Crad) has dim {residual}", e.name));
        if !a.field().is_finite() {
            f.check(der.is_characteristic_ideal(a, &rad).unwrap(), || format!("{}: radical not characteristic", e.name));
            if let Some(n) = &profile.nilradical {
                f.check(der.is_characteristic_ideal(a, n).unwrap(), || {
                    format!("{}: nilradical not characteristic", e.name)
                });
            }
        }
    }

    let s = catalog::sl2(q());
    let ss = catalog::direct_sum(&s, &s).unwrap();
    let parts = [Subspace::coordinate(q(), 6, &[0, 1, 2]), Subspace::coordinate(q(), 6, &[3, 4, 5])];
    let v = verify_completely_semisimple(&ss, &parts, &cfg).unwrap();
    f.check(v.is_yes(), || format!("sl2 ⊕ sl2: {v}"));
    let p = semisimplicity_flags(&ss, &derivation_basis(&ss), &Supplied::default(), &cfg).unwrap();
    f.check(p.characteristically_semisimple == Some(true), || "sl2 ⊕ sl2 not char semisimple".into());

    let c = catalog::cyclic_nilpotent(3, q());
    let v = characteristically_simple(&c, &derivation_basis(&c), &cfg).unwrap();
    f.check(v.is_no() && v.witness == Some(Subspace::coordinate(q(), 3, &[2])), || {
        format!("cyclic nilpotent 3: {v}, witness {:?}", v.witness.as_ref().map(|w| c.format_subspace(w)))
    });
}

fn random_matrix(rng: &mut Lcg, field: FieldSpec) -> Matrix {
    let rows = rng.next_in(1, 6) as usize;
    let cols = rng.next_in(1, 6) as usize;
    // Sparse-ish entries make rank deficiency common.
    let data = (0..rows * cols)
        .map(|_| {
            if rng.next_in(0, 2) == 0 {
                field.zero()
            } else {
                field.from_i64(rng.next_in(-9, 9))
            }
        })
        .collect();
    Matrix::from_flat(field, rows, cols, data).unwrap()
}

fn kernel_properties(f: &mut Failures) {
    for e in catalog::catalog() {
        let a = &e.algebra;
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = a.left_mult_basis(i).commutator(&a.left_mult_basis(j)).unwrap();
                let rhs = a.left_mult_matrix(a.product_basis(i, j)).unwrap();
                f.check(lhs == rhs, || format!("{}: [L_{i}, L_{j}] ≠ L_[{i},{j}]", e.name));
            }
        }
    }
    for field in KERNEL_FIELDS {
        let mut rng = Lcg::new(KERNEL_SEED);
        for sample in 0..RANDOM_MATRICES_PER_FIELD {
            let m = random_matrix(&mut rng, field);
            let r = m.rref();
            let again = r.matrix.rref();
            f.check(again.matrix == r.matrix && again.rank == r.rank, || format!("{field} #{sample}: rref not idempotent"));
            let ker = m.nullspace();
            f.check(ker.dim() + r.rank == m.cols(), || format!("{field} #{sample}: rank-nullity fails"));
            for v in ker.vectors() {
                f.check(m.mul_vec(&v).unwrap().iter().all(|s| s.is_zero()), || format!("{field} #{sample}: kernel vector"));
            }

            let x: Vector = (0..m.cols()).map(|_| field.from_i64(rng.next_in(-5, 5))).collect();
            let b = m.mul_vec(&x).unwrap();
            match m.solve(&b).unwrap() {
                Some(y) => f.check(m.mul_vec(&y).unwrap() == b, || format!("{field} #{sample}: solve residual")),
                None => f.check(false, || format!("{field} #{sample}: consistent system reported inconsistent")),
            }
            let c: Vector = (0..m.rows()).map(|_| field.from_i64(rng.next_in(-5, 5))).collect();
            let cols_space = Subspace::row_space(&m.transpose());
            match m.solve(&c).unwrap() {
                Some(y) => f.check(m.mul_vec(&y).unwrap() == c, || format!("{field} #{sample}: solve residual")),
                None => f.check(!cols_space.contains(&c).unwrap(), || format!("{field} #{sample}: missed a solution")),
            }

            let other = {
                let mut o = random_matrix(&mut rng, field);
                while o.cols() != m.cols() {
                    o = random_matrix(&mut rng, field);
                }
                o
            };
            let u = Subspace::row_space(&m);
            let w = Subspace::row_space(&other);
            let sum = u.sum(&w).unwrap();
            let meet = u.intersect(&w).unwrap();
            f.check(sum.dim() + meet.dim() == u.dim() + w.dim(), || format!("{field} #{sample}: dimension formula"));
            f.check(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&w).unwrap(), || {
                format!("{field} #{sample}: intersection not contained")
            });
        }
    }
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_leibkit")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn cli_contract(f: &mut Failures) {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for e in catalog::catalog() {
        let text = emit_algebra_string(&e.algebra);
        let back = parse_algebra_str(&text, true).unwrap();
        f.check(back == e.algebra, || format!("{}: parse(emit(A)) ≠ A", e.name));
    }
    let (code, _) = run_cli(&["catalog", "--emit", path_str(d)]);
    f.check(code == 0, || format!("catalog --emit exited {code}"));
    for e in catalog::catalog() {
        let file = d.join(format!("{}.json", e.name));
        let (code, _) = run_cli(&["validate", path_str(&file)]);
        f.check(code == 0, || format!("validate {} exited {code}", e.name));
        let copy = d.join(format!("{}.seed0.json", e.name));
        let (code, _) = run_cli(&["basis-change", path_str(&file), "--seed", "0", "-o", path_str(&copy)]);
        f.check(code == 0, || format!("basis-change {} exited {code}", e.name));
        let same = std::fs::read(&file).ok() == std::fs::read(&copy).ok();
        f.check(same, || format!("{}: seed 0 basis change is not byte-identical", e.name));
        let (c1, r1) = run_cli(&["analyze", path_str(&file), "--format", "machine"]);
        let (c2, r2) = run_cli(&["analyze", path_str(&file), "--format", "machine"]);
        f.check(c1 == 0 && c2 == 0, || format!("analyze {} exited {c1}/{c2}", e.name));
        f.check(r1 == r2 && !r1.is_empty(), || format!("{}: machine reports differ across runs", e.name));
    }

    let bad_p = d.join("bad_p.json");
    std::fs::write(&bad_p, r#"{"field":{"type":"Fp","p":4},"dim":1,"basis":["x"],"products":[]}"#).unwrap();
    let bad_id = d.join("bad_identity.json");
    std::fs::write(
        &bad_id,
        r#"{"field":{"type":"Q"},"dim":1,"basis":["x"],"products":[{"left":"x","right":"x","value":{"x":"1"}}]}"#,
    )
    .unwrap();
    let ex = d.join("example_3_8.json");
    let cur = d.join("current_sl2_p5.json");
    let sl2 = d.join("sl2_Q.json");
    let hol = d.join("hol.json");
    let missing = d.join("missing.json");
    let ln: Vec<String> = ["e", "h", "f"].iter().flat_map(|a| (1..5).map(move |t| format!("{a}_{t}"))).collect();
    let mut ln_args = vec!["check-ideal".to_string(), path_str(&cur).to_string()];
    for g in &ln {
        ln_args.push("-g".into());
        ln_args.push(g.clone());
    }
    let ln_args: Vec<&str> = ln_args.iter().map(String::as_str).collect();
    let mut strict_ln = vec!["analyze", path_str(&cur), "--strict", "--skip-hol"];
    for g in &ln {
        strict_ln.extend(["--radical", g.as_str()]);
    }
    let matrix: Vec<(Vec<&str>, i32)> = vec![
        (vec!["validate", path_str(&ex)], 0),
        (vec!["validate", path_str(&bad_p)], 2),
        (vec!["validate", path_str(&bad_id)], 2),
        (vec!["validate", path_str(&missing)], 2),
        (vec!["--no-validate", "analyze", path_str(&bad_id), "--skip-hol"], 2),
        (vec!["analyze", path_str(&sl2), "--strict"], 0),
        (vec!["analyze", path_str(&cur), "--strict", "--skip-hol"], 3),
        (strict_ln, 0),
        (ln_args, 1),
        (vec!["check-ideal", path_str(&ex), "-g", "z"], 0),
        (vec!["check-ideal", path_str(&ex), "-g", "w"], 1),
        (vec!["check-ideal", path_str(&ex), "-g", "2*q"], 2),
        (vec!["derivations", path_str(&ex)], 0),
        (vec!["holomorph", path_str(&ex), "-o", path_str(&hol)], 0),
        (vec!["validate", path_str(&hol)], 0),
        (vec!["make", "cyclic", "-n", "3", "-k", "0,1"], 0),
        (vec!["make", "cyclic", "-n", "1"], 2),
        (vec!["make", "cyclic", "-n", "3", "--field", "Fp:4"], 2),
        (vec!["make", "current", "--base", "sl2", "-p", "5"], 0),
        (vec!["make", "current", "--base", "sl2", "-p", "6"], 2),
        (vec!["make", "hemi", "--base", "sl2", "--module", "natural"], 0),
        (vec!["no-such-command"], 2),
    ];
    for (args, expected) in &matrix {
        let (code, _) = run_cli(args);
        f.check(code == *expected, || format!("`leibkit {}` exited {code}, expected {expected}", args.join(" ")));
    }
    let hol_dim = std::fs::read_to_string(&hol)
        .ok()
        .and_then(|t| parse_algebra_str(&t, true).ok())
        .map(|h: LeibnizAlgebra| h.dim());
    f.check(hol_dim == Some(8), || format!("holomorph of example_3_8 has dim {hol_dim:?}"));
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("cyclic derivation dimensions and closed forms", cyclic_derivations),
        ("four-dimensional nilpotent example reproduced", example_reproduction),
        ("truncated current algebra over F5", current_algebra),
        ("Leib and left center invariant under derivations", characteristic_left_center),
        ("holomorph centralizer and decomposition", holomorph_structure),
        ("completeness properties", completeness_properties),
        ("characteristic radical hierarchy", hierarchy),
        ("kernel properties", kernel_properties),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut f = Failures::default();
        run(&mut f);
        let ms = start.elapsed().as_millis();
        if f.0.is_empty() {
            println!("AC{} PASS {title} ({ms} ms)", i + 1);
        } else {
            failed += 1;
            println!("AC{} FAIL {title} ({ms} ms)", i + 1);
            for msg in &f.0 {
                println!("    - {msg}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
