//! Double-precision gradient checks for the composed blocks: forward built
//! from the same kernels the models use, analytic gradients from manually
//! chained VJPs, compared against central finite differences.

use crate::ops::{
    activation, activation_vjp, conv2d, conv2d_vjp, finite_difference_gradient, sda, sda_vjp,
    transposed_conv2d, transposed_conv2d_vjp, ActivationKind, ConvSpec,
};
use crate::tensor::{Mat, Tensor};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FD_STEP: f64 = 1e-4;
pub const TOLERANCE: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckBlock {
    Lowtention,
    Mbconv,
    Sda,
    Mlp,
}

impl CheckBlock {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "lowtention" => CheckBlock::Lowtention,
            "mbconv" => CheckBlock::Mbconv,
            "sda" => CheckBlock::Sda,
            "mlp" => CheckBlock::Mlp,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckBlock::Lowtention => "lowtention",
            CheckBlock::Mbconv => "mbconv",
            CheckBlock::Sda => "sda",
            CheckBlock::Mlp => "mlp",
        }
    }
}

pub const ALL_BLOCKS: [CheckBlock; 4] =
    [CheckBlock::Lowtention, CheckBlock::Mbconv, CheckBlock::Sda, CheckBlock::Mlp];

#[derive(Debug, Clone)]
pub struct CheckCase {
    pub label: String,
    pub max_rel_err: f64,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub block: &'static str,
    pub cases: Vec<CheckCase>,
    pub max_rel_err: f64,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.max_rel_err <= TOLERANCE
    }
}

fn randv(rng: &mut ChaCha8Rng, len: usize, scale: f64) -> Vec<f64> {
    (0..len).map(|_| (rng.gen::<f64>() * 2.0 - 1.0) * scale).collect()
}

/// max |a-b| scaled by the larger of 1 and the gradient magnitude.
pub fn scaled_max_err(analytic: &[f64], numeric: &[f64]) -> f64 {
    assert_eq!(analytic.len(), numeric.len());
    let mag = analytic.iter().fold(1f64, |m, v| m.max(v.abs()));
    analytic
        .iter()
        .zip(numeric.iter())
        .fold(0f64, |m, (a, b)| m.max((a - b).abs()))
        / mag
}

fn tensor_from(slice: &[f64], n: usize, c: usize, h: usize, w: usize) -> Tensor<f64> {
    Tensor::from_vec(n, c, h, w, slice.to_vec()).unwrap()
}

fn chw_to_tokens64(x: &Tensor<f64>, n: usize, c_lo: usize, c_hi: usize) -> Mat<f64> {
    let tokens = x.h * x.w;
    let mut m = Mat::zeros(tokens, c_hi - c_lo);
    for (ci, c) in (c_lo..c_hi).enumerate() {
        let base = x.idx(n, c, 0, 0);
        for t in 0..tokens {
            *m.at_mut(t, ci) = x.data[base + t];
        }
    }
    m
}

fn tokens_to_chw64(m: &Mat<f64>, out: &mut Tensor<f64>, n: usize) {
    let tokens = out.h * out.w;
    for c in 0..out.c {
        let base = out.idx(n, c, 0, 0);
        for t in 0..tokens {
            out.data[base + t] = m.at(t, c);
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

fn check_sda_case(tokens: usize, dim: usize, heads: usize, seed: u64) -> Result<CheckCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = randv(&mut rng, tokens * dim, 0.8);
    let k = randv(&mut rng, tokens * dim, 0.8);
    let v = randv(&mut rng, tokens * dim, 0.8);
    let ct = randv(&mut rng, tokens * dim, 1.0);
    let theta: Vec<f64> = q.iter().chain(&k).chain(&v).copied().collect();
    let f = |th: &[f64]| -> f64 {
        let (q, rest) = th.split_at(tokens * dim);
        let (k, v) = rest.split_at(tokens * dim);
        let o = sda(
            &Mat::from_vec(tokens, dim, q.to_vec()).unwrap(),
            &Mat::from_vec(tokens, dim, k.to_vec()).unwrap(),
            &Mat::from_vec(tokens, dim, v.to_vec()).unwrap(),
            heads,
        )
        .unwrap();
        dot(&o.data, &ct)
    };
    let (gq, gk, gv) = sda_vjp(
        &Mat::from_vec(tokens, dim, q).unwrap(),
        &Mat::from_vec(tokens, dim, k).unwrap(),
        &Mat::from_vec(tokens, dim, v).unwrap(),
        heads,
        &Mat::from_vec(tokens, dim, ct.clone()).unwrap(),
    )?;
    let analytic: Vec<f64> = gq.data.iter().chain(&gk.data).chain(&gv.data).copied().collect();
    let numeric = finite_difference_gradient(f, &theta, FD_STEP);
    Ok(CheckCase {
        label: format!("sda tokens={tokens} dim={dim} heads={heads}"),
        max_rel_err: scaled_max_err(&analytic, &numeric),
    })
}

fn check_mlp_case(c: usize, h: usize, w: usize, seed: u64) -> Result<CheckCase> {
    let hid = 2 * c + 1;
    let s1 = ConvSpec::pointwise(c, hid);
    let s2 = ConvSpec::pointwise(hid, c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = randv(&mut rng, c * h * w, 0.9);
    let w1 = randv(&mut rng, s1.weight_len(), 0.4);
    let w2 = randv(&mut rng, s2.weight_len(), 0.4);
    let ct = randv(&mut rng, c * h * w, 1.0);
    let nx = x.len();
    let nw1 = w1.len();
    let theta: Vec<f64> = x.iter().chain(&w1).chain(&w2).copied().collect();
    let f = |th: &[f64]| -> f64 {
        let (x, rest) = th.split_at(nx);
        let (w1, w2) = rest.split_at(nw1);
        let xt = tensor_from(x, 1, c, h, w);
        let pre = conv2d(&xt, &s1, w1, None).unwrap();
        let act = activation(&pre, ActivationKind::Gelu);
        let branch = conv2d(&act, &s2, w2, None).unwrap();
        let mut y = xt;
        for (a, b) in y.data.iter_mut().zip(branch.data.iter()) {
            *a += *b;
        }
        dot(&y.data, &ct)
    };
    // analytic chain: y = x + w2*(gelu(w1*x))
    let xt = tensor_from(&x, 1, c, h, w);
    let ctt = tensor_from(&ct, 1, c, h, w);
    let pre = conv2d(&xt, &s1, &w1, None)?;
    let act = activation(&pre, ActivationKind::Gelu);
    let (g_act, gw2, _) = conv2d_vjp(&act, &s2, &w2, &ctt)?;
    let g_pre = activation_vjp(&pre, ActivationKind::Gelu, &g_act)?;
    let (gx_branch, gw1, _) = conv2d_vjp(&xt, &s1, &w1, &g_pre)?;
    let mut analytic: Vec<f64> = ct.iter().zip(gx_branch.data.iter()).map(|(a, b)| a + b).collect();
    analytic.extend(gw1);
    analytic.extend(gw2);
    let numeric = finite_difference_gradient(f, &theta, FD_STEP);
    Ok(CheckCase {
        label: format!("mlp c={c} {h}x{w}"),
        max_rel_err: scaled_max_err(&analytic, &numeric),
    })
}

fn check_mbconv_case(c: usize, h: usize, w: usize, seed: u64) -> Result<CheckCase> {
    let hid = 4 * c;
    let s1 = ConvSpec::conv(c, hid, 3, 1);
    let s2 = ConvSpec::pointwise(hid, c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = randv(&mut rng, c * h * w, 0.8);
    let w1 = randv(&mut rng, s1.weight_len(), 0.3);
    let w2 = randv(&mut rng, s2.weight_len(), 0.3);
    // frozen-statistics batch norm constants (not checked parameters)
    let bn1: Vec<f64> = (0..hid).map(|_| 0.7 + rng.gen::<f64>()).collect();
    let bn2: Vec<f64> = (0..c).map(|_| 0.7 + rng.gen::<f64>()).collect();
    let ct = randv(&mut rng, c * h * w, 1.0);
    let nx = x.len();
    let nw1 = w1.len();
    let scale = |t: &Tensor<f64>, s: &[f64]| -> Tensor<f64> {
        let mut y = t.clone();
        for n in 0..y.n {
            for ci in 0..y.c {
                let lo = y.idx(n, ci, 0, 0);
                for v in &mut y.data[lo..lo + y.h * y.w] {
                    *v *= s[ci];
                }
            }
        }
        y
    };
    let theta: Vec<f64> = x.iter().chain(&w1).chain(&w2).copied().collect();
    let f = |th: &[f64]| -> f64 {
        let (x, rest) = th.split_at(nx);
        let (w1, w2) = rest.split_at(nw1);
        let xt = tensor_from(x, 1, c, h, w);
        let t1 = scale(&conv2d(&xt, &s1, w1, None).unwrap(), &bn1);
        let t2 = activation(&t1, ActivationKind::Hardswish);
        let t3 = scale(&conv2d(&t2, &s2, w2, None).unwrap(), &bn2);
        let mut y = xt;
        for (a, b) in y.data.iter_mut().zip(t3.data.iter()) {
            *a += *b;
        }
        dot(&y.data, &ct)
    };
    let xt = tensor_from(&x, 1, c, h, w);
    let ctt = tensor_from(&ct, 1, c, h, w);
    let t1 = scale(&conv2d(&xt, &s1, &w1, None)?, &bn1);
    let t2 = activation(&t1, ActivationKind::Hardswish);
    let g_t3 = scale(&ctt, &bn2);
    let (g_t2, gw2, _) = conv2d_vjp(&t2, &s2, &w2, &g_t3)?;
    let g_t1 = activation_vjp(&t1, ActivationKind::Hardswish, &g_t2)?;
    let g_conv1 = scale(&g_t1, &bn1);
    let (gx_branch, gw1, _) = conv2d_vjp(&xt, &s1, &w1, &g_conv1)?;
    let mut analytic: Vec<f64> = ct.iter().zip(gx_branch.data.iter()).map(|(a, b)| a + b).collect();
    analytic.extend(gw1);
    analytic.extend(gw2);
    let numeric = finite_difference_gradient(f, &theta, FD_STEP);
    Ok(CheckCase {
        label: format!("mbconv fused e4 c={c} {h}x{w}"),
        max_rel_err: scaled_max_err(&analytic, &numeric),
    })
}

fn check_lowtention_case(c: usize, res: usize, n: usize, seed: u64) -> Result<CheckCase> {
    let gamma = 2;
    let d = c / gamma;
    let heads = crate::graph::sda_heads(d)?;
    let dw = ConvSpec::depthwise(c, 3, n);
    let qkv = ConvSpec::pointwise(c, 3 * d);
    let up = ConvSpec::transposed(d, c, 3, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = randv(&mut rng, c * res * res, 0.8);
    let w_dw = randv(&mut rng, dw.weight_len(), 0.4);
    let w_qkv = randv(&mut rng, qkv.weight_len(), 0.3);
    let w_up = randv(&mut rng, up.weight_len(), 0.3);
    let ct = randv(&mut rng, c * res * res, 1.0);
    let (n0, n1, n2) = (x.len(), w_dw.len(), w_qkv.len());
    let theta: Vec<f64> = x.iter().chain(&w_dw).chain(&w_qkv).chain(&w_up).copied().collect();
    let sda_spatial = |t: &Tensor<f64>| -> Tensor<f64> {
        let mut out = Tensor::zeros(t.n, d, t.h, t.w);
        for b in 0..t.n {
            let q = chw_to_tokens64(t, b, 0, d);
            let k = chw_to_tokens64(t, b, d, 2 * d);
            let v = chw_to_tokens64(t, b, 2 * d, 3 * d);
            let o = sda(&q, &k, &v, heads).unwrap();
            tokens_to_chw64(&o, &mut out, b);
        }
        out
    };
    let f = |th: &[f64]| -> f64 {
        let (x, rest) = th.split_at(n0);
        let (w_dw, rest) = rest.split_at(n1);
        let (w_qkv, w_up) = rest.split_at(n2);
        let xt = tensor_from(x, 1, c, res, res);
        let t1 = conv2d(&xt, &dw, w_dw, None).unwrap();
        let t2 = conv2d(&t1, &qkv, w_qkv, None).unwrap();
        let t3 = sda_spatial(&t2);
        let t4 = transposed_conv2d(&t3, &up, w_up).unwrap();
        let mut y = xt;
        for (a, b) in y.data.iter_mut().zip(t4.data.iter()) {
            *a += *b;
        }
        dot(&y.data, &ct)
    };
    let xt = tensor_from(&x, 1, c, res, res);
    let ctt = tensor_from(&ct, 1, c, res, res);
    let t1 = conv2d(&xt, &dw, &w_dw, None)?;
    let t2 = conv2d(&t1, &qkv, &w_qkv, None)?;
    let t3 = sda_spatial(&t2);
    let (g_t3, g_up_w) = transposed_conv2d_vjp(&t3, &up, &w_up, &ctt)?;
    let mut g_t2 = Tensor::zeros(t2.n, t2.c, t2.h, t2.w);
    for b in 0..t2.n {
        let q = chw_to_tokens64(&t2, b, 0, d);
        let k = chw_to_tokens64(&t2, b, d, 2 * d);
        let v = chw_to_tokens64(&t2, b, 2 * d, 3 * d);
        let ct_o = chw_to_tokens64(&g_t3, b, 0, d);
        let (gq, gk, gv) = sda_vjp(&q, &k, &v, heads, &ct_o)?;
        let tokens = t2.h * t2.w;
        for ci in 0..d {
            for t in 0..tokens {
                let y = t / t2.w;
                let xx = t % t2.w;
                *g_t2.at_mut(b, ci, y, xx) = gq.at(t, ci);
                *g_t2.at_mut(b, d + ci, y, xx) = gk.at(t, ci);
                *g_t2.at_mut(b, 2 * d + ci, y, xx) = gv.at(t, ci);
            }
        }
    }
    let (g_t1, g_qkv_w, _) = conv2d_vjp(&t1, &qkv, &w_qkv, &g_t2)?;
    let (gx_branch, g_dw_w, _) = conv2d_vjp(&xt, &dw, &w_dw, &g_t1)?;
    let mut analytic: Vec<f64> = ct.iter().zip(gx_branch.data.iter()).map(|(a, b)| a + b).collect();
    analytic.extend(g_dw_w);
    analytic.extend(g_qkv_w);
    analytic.extend(g_up_w);
    let numeric = finite_difference_gradient(f, &theta, FD_STEP);
    Ok(CheckCase {
        label: format!("lowtention c={c} res={res} n={n}"),
        max_rel_err: scaled_max_err(&analytic, &numeric),
    })
}

pub fn run_check(block: CheckBlock, seed: u64) -> Result<CheckReport> {
    let cases = match block {
        CheckBlock::Sda => vec![
            check_sda_case(2, 4, 2, seed)?,
            check_sda_case(5, 4, 2, seed.wrapping_add(1))?,
            check_sda_case(3, 6, 1, seed.wrapping_add(2))?,
        ],
        CheckBlock::Mlp => vec![
            check_mlp_case(4, 3, 3, seed)?,
            check_mlp_case(6, 2, 5, seed.wrapping_add(1))?,
            check_mlp_case(3, 4, 4, seed.wrapping_add(2))?,
        ],
        CheckBlock::Mbconv => vec![
            check_mbconv_case(3, 5, 4, seed)?,
            check_mbconv_case(4, 4, 4, seed.wrapping_add(1))?,
            check_mbconv_case(2, 6, 5, seed.wrapping_add(2))?,
        ],
        CheckBlock::Lowtention => vec![
            check_lowtention_case(32, 8, 2, seed)?,
            check_lowtention_case(16, 6, 2, seed.wrapping_add(1))?,
            check_lowtention_case(8, 4, 1, seed.wrapping_add(2))?,
        ],
    };
    let max_rel_err = cases.iter().fold(0f64, |m, c| m.max(c.max_rel_err));
    if !max_rel_err.is_finite() {
        return Err(Error::NonFinite(format!("gradient check for {}", block.name())));
    }
    Ok(CheckReport { block: block.name(), cases, max_rel_err })
}
