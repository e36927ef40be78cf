use super::{Context, Element};
use crate::error::Result;
use crate::report::Report;
use crate::scalars::Scalar;

type Factors<K> = Vec<Element<K>>;

struct Builder<'a, K: Scalar> {
    ctx: &'a Context<K>,
    report: Report,
}

impl<K: Scalar> Builder<'_, K> {
    fn check(&mut self, name: &str, instance: String, lhs: &Factors<K>, rhs: &Factors<K>) {
        let ok = self.ctx.product(lhs) == self.ctx.product(rhs);
        self.report.record(name, instance, ok);
    }

    /// Checks the identity and its image under the anti-automorphism, where
    /// the image is formed by reversing the factor order.
    fn check_with_rho(&mut self, name: &str, instance: String, lhs: Factors<K>, rhs: Factors<K>) {
        self.check(name, instance.clone(), &lhs, &rhs);
        let rl: Factors<K> = lhs.into_iter().rev().collect();
        let rr: Factors<K> = rhs.into_iter().rev().collect();
        self.check(&format!("rho image: {name}"), instance, &rl, &rr);
    }
}

/// Checks the defining and derived relations, Jucys–Murphy identities and
/// the anti-automorphism on all admissible indices.
pub fn verify_relations<K: Scalar>(ctx: &Context<K>) -> Result<Report> {
    let n = ctx.n();
    let cp = ctx.couplings().clone();
    let d = cp.qdiff.clone();
    let nu = cp.nu.clone();
    let nu_inv = nu.try_inv()?;
    let mut b = Builder {
        ctx,
        report: Report::new("relations"),
    };
    let one: Element<K> = ctx.one();
    let sc = |k: &K| ctx.scalar(k.clone());
    let t = |i| ctx.gen_t(i).unwrap();
    let u = |i| ctx.gen_tinv(i).unwrap();
    let k = |i| ctx.gen_k(i).unwrap();
    let tm = |i| t(i).add_scalar(&-d.clone());

    for i in 1..n {
        let at = format!("i={i}");
        b.check("T U = 1", at.clone(), &vec![t(i), u(i)], &vec![one.clone()]);
        b.check("U T = 1", at.clone(), &vec![u(i), t(i)], &vec![one.clone()]);
        let kdef = one.sub(&t(i).sub(&u(i)).scale(&d.try_inv()?));
        b.report.record("K = 1 - (T - U)/(q - 1/q)", at.clone(), kdef == k(i));
        b.check("K T = nu K", at.clone(), &vec![k(i), t(i)], &vec![sc(&nu), k(i)]);
        b.check("T K = nu K", at.clone(), &vec![t(i), k(i)], &vec![sc(&nu), k(i)]);
        b.check("K K = mu K", at.clone(), &vec![k(i), k(i)], &vec![sc(&cp.mu), k(i)]);
        for j in i + 2..n {
            let at = format!("i={i}, j={j}");
            b.check("T_i T_j = T_j T_i", at.clone(), &vec![t(i), t(j)], &vec![t(j), t(i)]);
            b.check("K_i T_j = T_j K_i", at.clone(), &vec![k(i), t(j)], &vec![t(j), k(i)]);
            b.check("K_i K_j = K_j K_i", at, &vec![k(i), k(j)], &vec![k(j), k(i)]);
        }
        if i + 1 < n {
            b.check(
                "braid",
                at.clone(),
                &vec![t(i), t(i + 1), t(i)],
                &vec![t(i + 1), t(i), t(i + 1)],
            );
        }
        for (eps, j) in [(1i64, i + 1), (-1, i.wrapping_sub(1))] {
            if j < 1 || j >= n {
                continue;
            }
            let at = format!("i={i}, eps={eps}");
            b.check(
                "K_i T_j K_i = nu^-1 K_i",
                at.clone(),
                &vec![k(i), t(j), k(i)],
                &vec![sc(&nu_inv), k(i)],
            );
            b.check(
                "K_i T_j^-1 K_i = nu K_i",
                at.clone(),
                &vec![k(i), u(j), k(i)],
                &vec![sc(&nu), k(i)],
            );
            b.check_with_rho(
                "K_i T_j T_i = T_j T_i K_j",
                at.clone(),
                vec![k(i), t(j), t(i)],
                vec![t(j), t(i), k(j)],
            );
            b.check_with_rho("K_i K_j K_i = K_i", at.clone(), vec![k(i), k(j), k(i)], vec![k(i)]);
            b.check_with_rho(
                "(T_i - d) K_j (T_i - d) = (T_j - d) K_i (T_j - d)",
                at.clone(),
                vec![tm(i), k(j), tm(i)],
                vec![tm(j), k(i), tm(j)],
            );
            b.check_with_rho(
                "T_j K_i T_j = U_i K_j U_i",
                at.clone(),
                vec![t(j), k(i), t(j)],
                vec![u(i), k(j), u(i)],
            );
            b.check_with_rho("K_i T_j T_i = K_i K_j", at.clone(), vec![k(i), t(j), t(i)], vec![k(i), k(j)]);
            b.check_with_rho("K_i U_j U_i = K_i K_j", at.clone(), vec![k(i), u(j), u(i)], vec![k(i), k(j)]);
            b.check_with_rho(
                "K_j K_i (T_j - d) = K_j (T_i - d)",
                at,
                vec![k(j), k(i), tm(j)],
                vec![k(j), tm(i)],
            );
        }
    }

    let ys: Vec<Element<K>> = (1..=n).map(|j| ctx.jm(j)).collect::<Result<_>>()?;
    for a in 0..n {
        for c in a + 1..n {
            b.check(
                "y_a y_b = y_b y_a",
                format!("a={}, b={}", a + 1, c + 1),
                &vec![ys[a].clone(), ys[c].clone()],
                &vec![ys[c].clone(), ys[a].clone()],
            );
        }
    }
    let nu2 = nu.clone() * &nu;
    for j in 1..n {
        let at = format!("j={j}");
        let (yj, yj1) = (ys[j - 1].clone(), ys[j].clone());
        b.check("K_j y_{j+1} y_j = nu^2 K_j", at.clone(), &vec![k(j), yj1.clone(), yj.clone()], &vec![sc(&nu2), k(j)]);
        b.check("y_j y_{j+1} K_j = nu^2 K_j", at, &vec![yj, yj1, k(j)], &vec![sc(&nu2), k(j)]);
    }

    // The anti-automorphism on products of generators.
    let gens: Vec<Element<K>> = (1..n).flat_map(|i| [t(i), k(i)]).collect();
    for (x, gx) in gens.iter().enumerate() {
        for (y, gy) in gens.iter().enumerate() {
            let xy = ctx.mul(gx, gy);
            let ok = ctx.rho(&xy) == ctx.mul(&ctx.rho(gy), &ctx.rho(gx)) && ctx.rho(&ctx.rho(&xy)) == xy;
            b.report.record("rho(xy) = rho(y) rho(x)", format!("{x},{y}"), ok);
        }
        b.report.record("rho fixes generators", format!("{x}"), ctx.rho(gx) == *gx);
    }
    for (j, y) in ys.iter().enumerate() {
        b.report.record("rho(y_j) = y_j", format!("j={}", j + 1), ctx.rho(y) == *y);
    }
    Ok(b.report)
}
