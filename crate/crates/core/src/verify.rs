//! The per-curve invariant suite: every structural identity the library
//! promises, run against one parametrization. Backs the CLI `verify`
//! subcommand (exit 0 iff all checks pass).

use crate::adjoint::{
    adjoint_candidates, adjoint_pencils, base_point_off_curve, branch_adjoint_check, d_resultant,
    inverse_map, order_at_point, singularity_report, CurveModel,
};
use crate::inertia::{
    delta_minors_nu1, in_four_generator_ideal, in_pair_ideal, is_inertia_form, iterated_sylvester,
    m_matrix, morley_form, moving_curve_generators, sylvester_form,
};
use crate::mubasis::Parametrization;
use crate::poly::{monomials_of_degree, MultiPoly};
use crate::scalar::Scalar;
use crate::variable::{Var, T_VARS, X_VARS, Y_VARS};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

/// Runs the full invariant suite for one curve. `threads` caps internal
/// parallel minor enumeration.
pub fn verify_curve(phi: &Parametrization, threads: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let cm = match CurveModel::new(phi.clone()) {
        Ok(cm) => {
            out.push(check("curve model", true, "mu-basis, implicit equation and map degree agree"));
            cm
        }
        Err(e) => {
            out.push(check("curve model", false, e.to_string()));
            return out;
        }
    };
    let mb = cm.mu_basis();
    let fp = mb.form_pair();
    let d = phi.degree();
    let mu = mb.mu();
    let delta = d - 2;

    out.push(check(
        "degree sum",
        mb.p().xdeg() + mb.q().xdeg() == d as u32,
        format!("deg p + deg q = {} + {}", mb.p().xdeg(), mb.q().xdeg()),
    ));

    // resultant and subresultant structure
    let res = fp.resultant();
    let sres = fp.subresultants();
    let d0 = fp.d_determinant(0).expect("nu = 0 in range");
    out.push(check("D(0) = Res", d0 == res, "bordered determinant at nu = 0"));
    let d1c = fp.d1_coefficients(0).expect("nu = 0 in range");
    let d1_ok = (0..=delta).all(|i| d1c[i] == sres[delta - i]);
    out.push(check("D1(0) coefficients", d1_ok, "T-column expansion matches SRes order"));

    // Res = (-1)^(d1+1) sum SRes_(delta-i) q_i with sylv_(0,0) = sum q_i X^(delta-i) X2^i
    let sylv00 = sylvester_form(&fp, (0, 0)).expect("beta in range").value;
    let qs = sylv00.binary_coeffs(delta).expect("sylv00 is an X-form of degree delta");
    let mut acc = MultiPoly::zero();
    for i in 0..=delta {
        acc = &acc + &(&sres[delta - i] * &qs[i]);
    }
    if (fp.d1() + 1) % 2 == 1 {
        acc = -&acc;
    }
    out.push(check("Res=SRes identity", acc == res, "Sylvester-form contraction of the subresultants"));

    // minor cross-identities (nu = 1 lies in the M_nu range only for d2 >= 3)
    if fp.d1() == 2 && fp.d2() >= 3 {
        let minors = delta_minors_nu1(&fp).expect("d1 = 2, d2 >= 3");
        let x1 = MultiPoly::var(Var::X1);
        let x2 = MultiPoly::var(Var::X2);
        let ok = (0..delta).all(|i| {
            minors[i] == &(&x2 * &sres[i + 1]) - &(&x1 * &sres[i])
        });
        out.push(check("Delta_i identity", ok, "signed M_1 minors against subresultants"));
    }
    if fp.d1() >= 3 {
        let dbeta = fp.d_beta_coefficients(1).expect("nu = 1 in range for d1 >= 3");
        let x1 = MultiPoly::var(Var::X1);
        let x2 = MultiPoly::var(Var::X2);
        let mut ok = true;
        for (beta, val) in &dbeta {
            let i = beta.iter().position(|&e| e == 1).expect("unit W exponent");
            let expect = &(&x2 * &sres[delta - i]) - &(&x1 * &sres[delta - i - 1]);
            ok &= *val == expect;
        }
        out.push(check("D_i identity", ok, "W-coefficients of D(1) against subresultants"));
    }

    if mu == 1 {
        let hs = iterated_sylvester(&fp).expect("d1 = 1");
        let mut ok = true;
        for nu in 0..delta {
            let det = m_matrix(&fp, nu).expect("in range").det().expect("square");
            ok &= hs[nu] == det || hs[nu] == -&det;
        }
        out.push(check("iterated Sylvester", ok, "h_nu = det(M_nu) up to sign"));
    }

    // Morley structure; cofactors may carry T-monomials of degree <= 1
    let morley = morley_form(&fp);
    let mut textras = vec![MultiPoly::one()];
    textras.extend(T_VARS.iter().map(|&t| MultiPoly::var(t)));
    let swap_xy = |p: &MultiPoly| {
        p.substitute_many(&[
            (Var::X1, MultiPoly::var(Var::Y1)),
            (Var::X2, MultiPoly::var(Var::Y2)),
        ])
    };
    let marg_hi = &morley.component(delta as u32, 0) - &sylv00;
    let marg_lo = &morley.component(0, delta as u32) - &swap_xy(&sylv00);
    let ok = in_four_generator_ideal(&marg_hi, &fp, &textras)
        && in_four_generator_ideal(&marg_lo, &fp, &textras);
    out.push(check("Morley marginals", ok, "morl_(delta,0) and morl_(0,delta) against sylv_(0,0)"));
    let mut ok = true;
    for (xv, yv) in [(Var::X1, Var::Y1), (Var::X2, Var::Y2)] {
        let killer = &(&MultiPoly::var(xv) - &MultiPoly::var(yv)) * &morley.value;
        ok &= in_four_generator_ideal(&killer, &fp, &textras);
    }
    out.push(check("Morley annihilation", ok, "(X_i - Y_i) morl lies in the four-generator ideal"));

    // Morley expansion range: delta - nu <= d1 - 1
    {
        let mut ok = true;
        let mut ran = false;
        for nu in 0..=delta {
            if delta - nu > fp.d1() - 1 {
                continue;
            }
            ran = true;
            let mut expect = MultiPoly::zero();
            for alpha in monomials_of_degree(&X_VARS, (delta - nu) as u32) {
                let (_, mono) = alpha.leading().expect("monomial");
                let a1 = mono.iter().find(|(v, _)| *v == Var::X1).map(|&(_, e)| e).unwrap_or(0);
                let a2 = mono.iter().find(|(v, _)| *v == Var::X2).map(|&(_, e)| e).unwrap_or(0);
                let s = sylvester_form(&fp, (a1, a2)).expect("alpha in range").value;
                expect = &expect + &(&alpha * &swap_xy(&s));
            }
            let diff = &morley.component((delta - nu) as u32, nu as u32) - &expect;
            if diff.is_zero() {
                continue;
            }
            // membership modulo (f1(Y), f2(Y)) only
            let f1y = swap_xy(&fp.f1_poly());
            let f2y = swap_xy(&fp.f2_poly());
            let gens_monos = |dy: i64| -> Vec<MultiPoly> {
                if dy < 0 {
                    return Vec::new();
                }
                let mut v = Vec::new();
                for ym in monomials_of_degree(&Y_VARS, dy as u32) {
                    for xm in monomials_of_degree(&X_VARS, (delta - nu) as u32) {
                        for e in &textras {
                            v.push(&(&ym * &xm) * e);
                        }
                    }
                }
                v
            };
            let g1 = gens_monos(nu as i64 - fp.d1() as i64);
            let g2 = gens_monos(nu as i64 - fp.d2() as i64);
            let gens: Vec<(&MultiPoly, &[MultiPoly])> =
                vec![(&f1y, g1.as_slice()), (&f2y, g2.as_slice())];
            ok &= crate::inertia::express_in_ideal(&diff, &gens).is_some();
        }
        if ran {
            out.push(check("Morley expansion", ok, "morl_(delta-nu,nu) = sum X^alpha sylv_alpha"));
        }
    }

    // Sylvester duality on this pair
    {
        let mut ok = true;
        for s in 0..fp.d1() as u32 {
            for b1 in 0..=s {
                let beta = (s - b1, b1);
                let sylv_b = sylvester_form(&fp, beta).expect("beta in range").value;
                for a1 in 0..=s {
                    let alpha = (s - a1, a1);
                    let xal = MultiPoly::monomial(Scalar::one(), &[(Var::X1, alpha.0), (Var::X2, alpha.1)]);
                    let mut diff = &xal * &sylv_b;
                    if alpha == beta {
                        diff = &diff - &sylv00;
                    }
                    let extras = monomials_of_degree(&T_VARS, 1);
                    ok &= in_pair_ideal(&diff, &fp, &extras);
                }
            }
        }
        out.push(check("Sylvester duality", ok, "X^alpha sylv_beta = delta_(alpha,beta) sylv_(0,0) in H0_m"));
    }

    // generator family membership
    let deg_phi = cm.deg_phi();
    let gens = moving_curve_generators(mb, deg_phi, threads);
    let mut ok = true;
    for g in &gens.generators {
        let k = (delta as u32 + 1).saturating_sub(g.form.xdeg());
        ok &= is_inertia_form(&g.form, mb, k);
    }
    out.push(check(
        "generator membership",
        ok,
        format!("{} generators certified with k = delta - nu + 1", gens.generators.len()),
    ));

    if deg_phi != 1 {
        out.push(check("birational analysis", true, "skipped: deg(phi) > 1"));
        return out;
    }

    // inverse map
    match inverse_map(&cm) {
        Ok(inv) => out.push(check(
            "inverse map",
            true,
            format!("orientation {}", inv.orientation),
        )),
        Err(e) => out.push(check("inverse map", false, e.to_string())),
    }

    if d < 3 {
        return out;
    }

    // D-resultant degree and cluster mass
    match (d_resultant(&cm), singularity_report(&cm)) {
        (Ok(delta_t), Ok(report)) => {
            let bound = (d - 1) * (d - 2);
            out.push(check(
                "D-resultant degree",
                report.total_degree <= bound,
                format!("deg Delta = {} (bound {})", report.total_degree, bound),
            ));
            let mass: u32 = report.clusters.iter().map(|c| c.epsilon).sum();
            out.push(check(
                "cluster mass",
                mass as usize == report.total_degree,
                format!("sum epsilon = {mass}"),
            ));
            let excused = report.total_degree < report.expected_degree
                || report.clusters.iter().any(|c| match (c.multiplicity, c.point.as_ref()) {
                    (Some(m), Some(_)) => c.epsilon != m * (m.saturating_sub(1)),
                    _ => false,
                });
            out.push(check(
                "genus ledger",
                report.balanced || excused,
                format!(
                    "lhs = {}, accounted twice = {}{}",
                    report.genus_lhs,
                    report.accounted_twice,
                    if excused && !report.balanced {
                        " (infinitely-near or infinite-parameter mass)"
                    } else {
                        ""
                    }
                ),
            ));

            // adjoint candidates vanish at resolved singular points
            if let Ok(cands) = adjoint_candidates(&cm) {
                let mut ok = true;
                for cluster in &report.clusters {
                    let (Some(point), Some(m)) = (cluster.point.as_ref(), cluster.multiplicity)
                    else {
                        continue;
                    };
                    if m < 2 {
                        continue;
                    }
                    for cand in &cands {
                        ok &= order_at_point(cand, point) >= m - 1;
                    }
                }
                out.push(check("adjoint vanishing", ok, "candidates vanish to order >= m_p - 1"));
            }

            // adjoint pencils are inertia forms and their coefficients adjoint
            if let Ok(pencils) = adjoint_pencils(&cm) {
                let mut ok = true;
                for pencil in &pencils {
                    let k = (delta as u32 + 1).saturating_sub(pencil.xdeg());
                    ok &= is_inertia_form(pencil, mb, k);
                    let coeffs = pencil.poly().binary_coeffs(1).expect("pencil is X-linear");
                    for cluster in &report.clusters {
                        let (Some(point), Some(m)) = (cluster.point.as_ref(), cluster.multiplicity)
                        else {
                            continue;
                        };
                        if m < 2 {
                            continue;
                        }
                        for c in coeffs.iter().filter(|c| !c.is_zero()) {
                            ok &= order_at_point(c, point) >= m - 1;
                        }
                    }
                }
                out.push(check("adjoint pencils", ok, format!("{} pencils certified", pencils.len())));
            }

            // branch-level adjunction for the principal subresultant curve
            let rational_mass: u32 = crate::univariate::rational_roots(&report.dres, Var::ParamT)
                .map(|rs| rs.iter().map(|(_, m)| *m).sum())
                .unwrap_or(0);
            let all_rational = rational_mass as usize == report.total_degree;
            if (mu >= 2 || d == 3) && all_rational {
                if let Some(q) = base_point_off_curve(&cm) {
                    let dform = if mu >= 2 {
                        fp.subresultants()[0].primitive_part()
                    } else {
                        adjoint_candidates(&cm).expect("mu = 1 candidates")[0].clone()
                    };
                    match branch_adjoint_check(&cm, &dform, &q) {
                        Ok((holds, checks)) => {
                            let eq = checks.iter().all(|c| c.equality);
                            out.push(check(
                                "branch adjunction",
                                holds,
                                format!(
                                    "{} branches{}",
                                    checks.len(),
                                    if eq { ", all with equality" } else { "" }
                                ),
                            ));
                        }
                        Err(e) => out.push(check("branch adjunction", false, e.to_string())),
                    }
                }
            }
            let _ = delta_t;
        }
        (Err(e), _) | (_, Err(e)) => {
            out.push(check("singularity analysis", false, e.to_string()));
        }
    }

    out
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
