use crate::tensor::{Elem, Mat, Tensor};
use crate::{Error, Result};

/// Convolution descriptor. Padding is floor(k/2) for every conv in the model
/// family; transposed stride-2 convs use output padding stride-1 so the
/// output resolution is exactly stride times the input resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvSpec {
    pub in_channels: usize,
    pub out_channels: usize,
    pub kernel: usize,
    pub stride: usize,
    pub padding: usize,
    pub groups: usize,
    pub transposed: bool,
    pub bias: bool,
}

impl ConvSpec {
    pub fn conv(in_channels: usize, out_channels: usize, kernel: usize, stride: usize) -> Self {
        ConvSpec {
            in_channels,
            out_channels,
            kernel,
            stride,
            padding: kernel / 2,
            groups: 1,
            transposed: false,
            bias: false,
        }
    }

    pub fn pointwise(in_channels: usize, out_channels: usize) -> Self {
        Self::conv(in_channels, out_channels, 1, 1)
    }

    pub fn depthwise(channels: usize, kernel: usize, stride: usize) -> Self {
        ConvSpec { groups: channels, ..Self::conv(channels, channels, kernel, stride) }
    }

    pub fn transposed(in_channels: usize, out_channels: usize, kernel: usize, stride: usize) -> Self {
        ConvSpec { transposed: true, ..Self::conv(in_channels, out_channels, kernel, stride) }
    }

    pub fn transposed_depthwise(channels: usize, kernel: usize, stride: usize) -> Self {
        ConvSpec { transposed: true, ..Self::depthwise(channels, kernel, stride) }
    }

    pub fn with_bias(self) -> Self {
        ConvSpec { bias: true, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.in_channels == 0 || self.out_channels == 0 || self.kernel == 0 || self.stride == 0
        {
            return Err(Error::InvalidSpec(format!("degenerate conv spec {self:?}")));
        }
        if self.groups == 0
            || self.in_channels % self.groups != 0
            || self.out_channels % self.groups != 0
        {
            return Err(Error::InvalidSpec(format!(
                "groups {} must divide channels {}->{}",
                self.groups, self.in_channels, self.out_channels
            )));
        }
        Ok(())
    }

    /// Number of weight elements. Transposed convs store weights as
    /// (in, out/groups, k, k), forward convs as (out, in/groups, k, k).
    pub fn weight_len(&self) -> usize {
        if self.transposed {
            self.in_channels * (self.out_channels / self.groups) * self.kernel * self.kernel
        } else {
            self.out_channels * (self.in_channels / self.groups) * self.kernel * self.kernel
        }
    }

    pub fn output_padding(&self) -> usize {
        if self.transposed {
            self.stride - 1
        } else {
            0
        }
    }

    pub fn out_hw(&self, h: usize, w: usize) -> Result<(usize, usize)> {
        if self.transposed {
            let oh = (h - 1) * self.stride + self.kernel + self.output_padding();
            let ow = (w - 1) * self.stride + self.kernel + self.output_padding();
            if oh < 2 * self.padding || ow < 2 * self.padding {
                return Err(Error::InvalidSpec(format!("transposed conv underflow on {h}x{w}")));
            }
            Ok((oh - 2 * self.padding, ow - 2 * self.padding))
        } else {
            if h + 2 * self.padding < self.kernel || w + 2 * self.padding < self.kernel {
                return Err(Error::ShapeMismatch(format!(
                    "input {h}x{w} too small for kernel {}",
                    self.kernel
                )));
            }
            let oh = (h + 2 * self.padding - self.kernel) / self.stride + 1;
            let ow = (w + 2 * self.padding - self.kernel) / self.stride + 1;
            Ok((oh, ow))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    /// Inference-mode batch norm: per-channel affine with frozen statistics.
    BatchInference,
    /// Layer norm across the channel dimension at each spatial position.
    Layer,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormSpec {
    pub kind: NormKind,
    pub channels: usize,
    pub eps: f64,
}

impl NormSpec {
    pub fn batch(channels: usize) -> Self {
        NormSpec { kind: NormKind::BatchInference, channels, eps: 1e-5 }
    }

    pub fn layer(channels: usize) -> Self {
        NormSpec { kind: NormKind::Layer, channels, eps: 1e-5 }
    }

    /// Parameter layout: batch = [gamma, beta, mean, var], layer = [gamma, beta].
    pub fn param_len(&self) -> usize {
        match self.kind {
            NormKind::BatchInference => 4 * self.channels,
            NormKind::Layer => 2 * self.channels,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActivationKind {
    Relu,
    Gelu,
    Hardswish,
    Identity,
}

fn check_input<E: Elem>(x: &Tensor<E>, spec: &ConvSpec) -> Result<()> {
    spec.validate()?;
    if x.c != spec.in_channels {
        return Err(Error::ShapeMismatch(format!(
            "conv expects {} input channels, tensor has {}",
            spec.in_channels, x.c
        )));
    }
    Ok(())
}

/// Plain nested-loop convolution, the reference the fast path is tested against.
pub fn conv2d_reference<E: Elem>(
    x: &Tensor<E>,
    spec: &ConvSpec,
    w: &[E],
    b: Option<&[E]>,
) -> Result<Tensor<E>> {
    check_input(x, spec)?;
    if spec.transposed {
        return Err(Error::InvalidSpec("conv2d called with transposed spec".into()));
    }
    if w.len() != spec.weight_len() {
        return Err(Error::ShapeMismatch(format!(
            "conv weight has {} elements, spec needs {}",
            w.len(),
            spec.weight_len()
        )));
    }
    let (oh, ow) = spec.out_hw(x.h, x.w)?;
    let (k, s, p, g) = (spec.kernel, spec.stride, spec.padding, spec.groups);
    let cing = spec.in_channels / g;
    let coutg = spec.out_channels / g;
    let mut y = Tensor::zeros(x.n, spec.out_channels, oh, ow);
    for n in 0..x.n {
        for gi in 0..g {
            for col in 0..coutg {
                let co = gi * coutg + col;
                for oy in 0..oh {
                    for ox in 0..ow {
                        let mut acc = E::ZERO;
                        for cil in 0..cing {
                            let ci = gi * cing + cil;
                            for ky in 0..k {
                                let iy = oy * s + ky;
                                if iy < p || iy - p >= x.h {
                                    continue;
                                }
                                for kx in 0..k {
                                    let ix = ox * s + kx;
                                    if ix < p || ix - p >= x.w {
                                        continue;
                                    }
                                    let wv = w[((co * cing + cil) * k + ky) * k + kx];
                                    acc += wv * x.at(n, ci, iy - p, ix - p);
                                }
                            }
                        }
                        if let Some(bias) = b {
                            acc += bias[co];
                        }
                        *y.at_mut(n, co, oy, ox) = acc;
                    }
                }
            }
        }
    }
    Ok(y)
}

/// Fill `col` (kk x tile rows) for output rows [oy0, oy1).
#[allow(clippy::too_many_arguments)]
fn im2col_rows<E: Elem>(
    x: &Tensor<E>,
    n: usize,
    gi: usize,
    cing: usize,
    k: usize,
    s: usize,
    p: usize,
    oy0: usize,
    oy1: usize,
    ow: usize,
    col: &mut [E],
) {
    let tlen = (oy1 - oy0) * ow;
    for cil in 0..cing {
        let ci = gi * cing + cil;
        for ky in 0..k {
            for kx in 0..k {
                let row = &mut col[((cil * k + ky) * k + kx) * tlen..((cil * k + ky) * k + kx + 1) * tlen];
                for oy in oy0..oy1 {
                    let seg = &mut row[(oy - oy0) * ow..(oy - oy0 + 1) * ow];
                    let iy = oy * s + ky;
                    if iy < p || iy - p >= x.h {
                        for v in seg.iter_mut() {
                            *v = E::ZERO;
                        }
                        continue;
                    }
                    let base = x.idx(n, ci, iy - p, 0);
                    for (ox, v) in seg.iter_mut().enumerate() {
                        let ix = ox * s + kx;
                        *v = if ix < p || ix - p >= x.w { E::ZERO } else { x.data[base + ix - p] };
                    }
                }
            }
        }
    }
}

/// acc (coutg x tlen) += w (coutg x kk) * cols (kk x tlen), four output
/// channels at a time so each col row is read once per block instead of
/// once per channel.
fn matmul_tile<E: Elem>(acc: &mut [E], w: &[E], cols: &[E], coutg: usize, kk: usize, tlen: usize) {
    let mut co = 0;
    while co + 4 <= coutg {
        let block = &mut acc[co * tlen..(co + 4) * tlen];
        let (r0, rest) = block.split_at_mut(tlen);
        let (r1, rest) = rest.split_at_mut(tlen);
        let (r2, r3) = rest.split_at_mut(tlen);
        for kki in 0..kk {
            let crow = &cols[kki * tlen..(kki + 1) * tlen];
            let a0 = w[co * kk + kki];
            let a1 = w[(co + 1) * kk + kki];
            let a2 = w[(co + 2) * kk + kki];
            let a3 = w[(co + 3) * kk + kki];
            for i in 0..tlen {
                let cv = crow[i];
                r0[i] += a0 * cv;
                r1[i] += a1 * cv;
                r2[i] += a2 * cv;
                r3[i] += a3 * cv;
            }
        }
        co += 4;
    }
    while co < coutg {
        let row = &mut acc[co * tlen..(co + 1) * tlen];
        for kki in 0..kk {
            let a = w[co * kk + kki];
            let crow = &cols[kki * tlen..(kki + 1) * tlen];
            for i in 0..tlen {
                row[i] += a * crow[i];
            }
        }
        co += 1;
    }
}

fn conv2d_depthwise<E: Elem>(
    x: &Tensor<E>,
    spec: &ConvSpec,
    w: &[E],
    b: Option<&[E]>,
) -> Result<Tensor<E>> {
    let (oh, ow) = spec.out_hw(x.h, x.w)?;
    let (k, s, p) = (spec.kernel, spec.stride, spec.padding);
    let mut y = Tensor::zeros(x.n, spec.out_channels, oh, ow);
    for n in 0..x.n {
        for c in 0..x.c {
            let wbase = c * k * k;
            let bias = b.map_or(E::ZERO, |bb| bb[c]);
            for oy in 0..oh {
                for ox in 0..ow {
                    let mut acc = bias;
                    for ky in 0..k {
                        let iy = oy * s + ky;
                        if iy < p || iy - p >= x.h {
                            continue;
                        }
                        for kx in 0..k {
                            let ix = ox * s + kx;
                            if ix < p || ix - p >= x.w {
                                continue;
                            }
                            acc += w[wbase + ky * k + kx] * x.at(n, c, iy - p, ix - p);
                        }
                    }
                    *y.at_mut(n, c, oy, ox) = acc;
                }
            }
        }
    }
    Ok(y)
}

/// Packed fast path: pointwise convs run as a direct matmul over the spatial
/// plane, grouped convs go through per-group im2col, depthwise is a direct
/// stencil. This is the kernel the benchmark harness times.
pub fn conv2d<E: Elem>(
    x: &Tensor<E>,
    spec: &ConvSpec,
    w: &[E],
    b: Option<&[E]>,
) -> Result<Tensor<E>> {
    check_input(x, spec)?;
    if spec.transposed {
        return Err(Error::InvalidSpec("conv2d called with transposed spec".into()));
    }
    if w.len() != spec.weight_len() {
        return Err(Error::ShapeMismatch(format!(
            "conv weight has {} elements, spec needs {}",
            w.len(),
            spec.weight_len()
        )));
    }
    if spec.groups == spec.in_channels && spec.out_channels == spec.in_channels && spec.groups > 1
    {
        return conv2d_depthwise(x, spec, w, b);
    }
    let (oh, ow) = spec.out_hw(x.h, x.w)?;
    let (k, s, p, g) = (spec.kernel, spec.stride, spec.padding, spec.groups);
    let cing = spec.in_channels / g;
    let coutg = spec.out_channels / g;
    let kk = cing * k * k;
    let pointwise = k == 1 && s == 1 && p == 0;
    let mut y = Tensor::zeros(x.n, spec.out_channels, oh, ow);
    // Tile the plane by output rows so the column tile stays cache-resident
    // instead of streaming a plane-sized buffer once per output channel.
    let rows_per_tile = (1 << 18) / (kk * ow).max(1);
    let rows_per_tile = rows_per_tile.clamp(1, oh);
    let mut col = if pointwise { Vec::new() } else { vec![E::ZERO; kk * rows_per_tile * ow] };
    let mut acc = vec![E::ZERO; coutg * rows_per_tile * ow];
    for n in 0..x.n {
        for gi in 0..g {
            let wg = &w[gi * coutg * kk..(gi + 1) * coutg * kk];
            let mut oy0 = 0;
            while oy0 < oh {
                let oy1 = (oy0 + rows_per_tile).min(oh);
                let tlen = (oy1 - oy0) * ow;
                let cols: &[E] = if pointwise {
                    let lo = x.idx(n, gi * cing, oy0, 0);
                    // Channel planes are hw apart; a row-aligned tile of each
                    // sits at stride hw, so gather them into the tile buffer.
                    if cing == x.c && oy0 == 0 && oy1 == oh {
                        &x.data[lo..lo + kk * tlen]
                    } else {
                        col.resize(kk * tlen, E::ZERO);
                        for cil in 0..cing {
                            let src = x.idx(n, gi * cing + cil, oy0, 0);
                            col[cil * tlen..(cil + 1) * tlen]
                                .copy_from_slice(&x.data[src..src + tlen]);
                        }
                        &col
                    }
                } else {
                    im2col_rows(x, n, gi, cing, k, s, p, oy0, oy1, ow, &mut col);
                    &col[..kk * tlen]
                };
                for v in acc[..coutg * tlen].iter_mut() {
                    *v = E::ZERO;
                }
                matmul_tile(&mut acc[..coutg * tlen], wg, cols, coutg, kk, tlen);
                for col_out in 0..coutg {
                    let co = gi * coutg + col_out;
                    let ybase = y.idx(n, co, oy0, 0);
                    let dst = &mut y.data[ybase..ybase + tlen];
                    let src = &acc[col_out * tlen..(col_out + 1) * tlen];
                    if let Some(bias) = b {
                        for (d, &v) in dst.iter_mut().zip(src) {
                            *d = v + bias[co];
                        }
                    } else {
                        dst.copy_from_slice(src);
                    }
                }
                oy0 = oy1;
            }
        }
    }
    Ok(y)
}

/// Scatter-style transposed convolution: the literal adjoint of `conv2d`,
/// kept as the reference implementation.
pub fn transposed_conv2d_reference<E: Elem>(
    x: &Tensor<E>,
    spec: &ConvSpec,
    w: &[E],
) -> Result<Tensor<E>> {
    check_input(x, spec)?;
    if !spec.transposed {
        return Err(Error::InvalidSpec("transposed_conv2d called with forward spec".into()));
    }
    if w.len() != spec.weight_len() {
        return Err(Error::ShapeMismatch(format!(
            "transposed conv weight has {} elements, spec needs {}",
            w.len(),
            spec.weight_len()
        )));
    }
    let (oh, ow) = spec.out_hw(x.h, x.w)?;
    let (k, s, p, g) = (spec.kernel, spec.stride, spec.padding, spec.groups);
    let cing = spec.in_channels / g;
    let coutg = spec.out_channels / g;
    let mut y = Tensor::zeros(x.n, spec.out_channels, oh, ow);
    for n in 0..x.n {
        for gi in 0..g {
            for cil in 0..cing {
                let ci = gi * cing + cil;
                for iy in 0..x.h {
                    for ix in 0..x.w {
                        let xv = x.at(n, ci, iy, ix);
                        for col in 0..coutg {
                            let co = gi * coutg + col;
                            for ky in 0..k {
                                let oy = iy * s + ky;
                                if oy < p || oy - p >= oh {
                                    continue;
                                }
                                for kx in 0..k {
                                    let ox = ix * s + kx;
                                    if ox < p || ox - p >= ow {
                                        continue;
                                    }
                                    let wv = w[((ci * coutg + col) * k + ky) * k + kx];
                                    *y.at_mut(n, co, oy - p, ox - p) += wv * xv;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(y)
}

/// Gather-style transposed convolution, the fast path.
pub fn transposed_conv2d<E: Elem>(x: &Tensor<E>, spec: &ConvSpec, w: &[E]) -> Result<Tensor<E>> {
    check_input(x, spec)?;
    if !spec.transposed {
        return Err(Error::InvalidSpec("transposed_conv2d called with forward spec".into()));
    }
    if w.len() != spec.weight_len() {
        return Err(Error::ShapeMismatch(format!(
            "transposed conv weight has {} elements, spec needs {}",
            w.len(),
            spec.weight_len()
        )));
    }
    let (oh, ow) = spec.out_hw(x.h, x.w)?;
    let (k, s, p, g) = (spec.kernel, spec.stride, spec.padding, spec.groups);
    let cing = spec.in_channels / g;
    let coutg = spec.out_channels / g;
    let mut y = Tensor::zeros(x.n, spec.out_channels, oh, ow);
    for n in 0..x.n {
        for gi in 0..g {
            for col in 0..coutg {
                let co = gi * coutg + col;
                for oy in 0..oh {
                    for ox in 0..ow {
                        let mut acc = E::ZERO;
                        for ky in 0..k {
                            let ty = oy + p;
                            if ty < ky || (ty - ky) % s != 0 || (ty - ky) / s >= x.h {
                                continue;
                            }
                            let iy = (ty - ky) / s;
                            for kx in 0..k {
                                let tx = ox + p;
                                if tx < kx || (tx - kx) % s != 0 || (tx - kx) / s >= x.w {
                                    continue;
                                }
                                let ix = (tx - kx) / s;
                                for cil in 0..cing {
                                    let ci = gi * cing + cil;
                                    let wv = w[((ci * coutg + col) * k + ky) * k + kx];
                                    acc += wv * x.at(n, ci, iy, ix);
                                }
                            }
                        }
                        *y.at_mut(n, co, oy, ox) = acc;
                    }
                }
            }
        }
    }
    Ok(y)
}

pub fn normalize<E: Elem>(x: &Tensor<E>, spec: &NormSpec, params: &[E]) -> Result<Tensor<E>> {
    if x.c != spec.channels {
        return Err(Error::ShapeMismatch(format!(
            "norm over {} channels applied to tensor with {}",
            spec.channels, x.c
        )));
    }
    if params.len() != spec.param_len() {
        return Err(Error::ShapeMismatch(format!(
            "norm params have {} elements, spec needs {}",
            params.len(),
            spec.param_len()
        )));
    }
    let c = spec.channels;
    let eps = E::from_f64(spec.eps);
    let mut y = x.clone();
    match spec.kind {
        NormKind::BatchInference => {
            let (gamma, rest) = params.split_at(c);
            let (beta, rest) = rest.split_at(c);
            let (mean, var) = rest.split_at(c);
            for ci in 0..c {
                let inv = E::ONE / (var[ci] + eps).sqrt();
                let scale = gamma[ci] * inv;
                let shift = beta[ci] - mean[ci] * scale;
                for n in 0..x.n {
                    let lo = x.idx(n, ci, 0, 0);
                    for v in &mut y.data[lo..lo + x.h * x.w] {
                        *v = *v * scale + shift;
                    }
                }
            }
        }
        NormKind::Layer => {
            let (gamma, beta) = params.split_at(c);
            let cf = E::from_f64(c as f64);
            for n in 0..x.n {
                for yy in 0..x.h {
                    for xx in 0..x.w {
                        let mut mean = E::ZERO;
                        for ci in 0..c {
                            mean += x.at(n, ci, yy, xx);
                        }
                        mean = mean / cf;
                        let mut var = E::ZERO;
                        for ci in 0..c {
                            let d = x.at(n, ci, yy, xx) - mean;
                            var += d * d;
                        }
                        var = var / cf;
                        let inv = E::ONE / (var + eps).sqrt();
                        for ci in 0..c {
                            let xhat = (x.at(n, ci, yy, xx) - mean) * inv;
                            *y.at_mut(n, ci, yy, xx) = xhat * gamma[ci] + beta[ci];
                        }
                    }
                }
            }
        }
    }
    Ok(y)
}

pub fn activation_scalar<E: Elem>(v: E, kind: ActivationKind) -> E {
    match kind {
        ActivationKind::Relu => v.max(E::ZERO),
        ActivationKind::Gelu => {
            let half = E::from_f64(0.5);
            let inv_sqrt2 = E::from_f64(std::f64::consts::FRAC_1_SQRT_2);
            half * v * (E::ONE + (v * inv_sqrt2).erf())
        }
        ActivationKind::Hardswish => {
            let three = E::from_f64(3.0);
            let six = E::from_f64(6.0);
            let t = if (v + three) < E::ZERO {
                E::ZERO
            } else if (v + three) > six {
                six
            } else {
                v + three
            };
            v * t / six
        }
        ActivationKind::Identity => v,
    }
}

pub fn activation_derivative<E: Elem>(v: E, kind: ActivationKind) -> E {
    match kind {
        ActivationKind::Relu => {
            if v > E::ZERO {
                E::ONE
            } else {
                E::ZERO
            }
        }
        ActivationKind::Gelu => {
            let half = E::from_f64(0.5);
            let inv_sqrt2 = E::from_f64(std::f64::consts::FRAC_1_SQRT_2);
            let inv_sqrt2pi = E::from_f64(1.0 / (2.0 * std::f64::consts::PI).sqrt());
            let cdf = half * (E::ONE + (v * inv_sqrt2).erf());
            let pdf = inv_sqrt2pi * (-(v * v) * half).exp();
            cdf + v * pdf
        }
        ActivationKind::Hardswish => {
            // Closed boundaries match the autograd convention of the framework
            // the reference values were computed with.
            let three = E::from_f64(3.0);
            if v <= -three {
                E::ZERO
            } else if v >= three {
                E::ONE
            } else {
                v / three + E::from_f64(0.5)
            }
        }
        ActivationKind::Identity => E::ONE,
    }
}

pub fn activation<E: Elem>(x: &Tensor<E>, kind: ActivationKind) -> Tensor<E> {
    x.map(|v| activation_scalar(v, kind))
}

pub fn global_avg_pool<E: Elem>(x: &Tensor<E>) -> Tensor<E> {
    let mut y = Tensor::zeros(x.n, x.c, 1, 1);
    let inv = E::ONE / E::from_f64((x.h * x.w) as f64);
    for n in 0..x.n {
        for c in 0..x.c {
            let lo = x.idx(n, c, 0, 0);
            let mut acc = E::ZERO;
            for v in &x.data[lo..lo + x.h * x.w] {
                acc += *v;
            }
            *y.at_mut(n, c, 0, 0) = acc * inv;
        }
    }
    y
}

/// y = x W^T + b with W stored (out, in).
pub fn linear<E: Elem>(x: &Mat<E>, w: &Mat<E>, b: Option<&[E]>) -> Result<Mat<E>> {
    if x.cols != w.cols {
        return Err(Error::ShapeMismatch(format!(
            "linear input dim {} vs weight dim {}",
            x.cols, w.cols
        )));
    }
    let mut y = Mat::zeros(x.rows, w.rows);
    for r in 0..x.rows {
        let xr = x.row(r);
        for o in 0..w.rows {
            let wr = w.row(o);
            let mut acc = b.map_or(E::ZERO, |bb| bb[o]);
            for (xv, wv) in xr.iter().zip(wr.iter()) {
                acc += *xv * *wv;
            }
            *y.at_mut(r, o) = acc;
        }
    }
    Ok(y)
}

/// Row-wise softmax with max subtraction for stability.
pub fn softmax_rows<E: Elem>(x: &Mat<E>) -> Mat<E> {
    let mut y = x.clone();
    softmax_rows_inplace(&mut y);
    y
}

fn softmax_rows_inplace<E: Elem>(y: &mut Mat<E>) {
    for r in 0..y.rows {
        let row = y.row_mut(r);
        let mut mx = row[0];
        for v in row.iter() {
            mx = mx.max(*v);
        }
        let mut sum = E::ZERO;
        for v in row.iter_mut() {
            *v = (*v - mx).exp();
            sum += *v;
        }
        let inv = E::ONE / sum;
        for v in row.iter_mut() {
            *v = *v * inv;
        }
    }
}

/// Scaled dot-product attention over token matrices (tokens x dim), split
/// into `heads` equal channel slices, scale 1/sqrt(head_dim).
pub fn sda<E: Elem>(q: &Mat<E>, k: &Mat<E>, v: &Mat<E>, heads: usize) -> Result<Mat<E>> {
    let t = q.rows;
    let d = q.cols;
    if k.rows != t || v.rows != t || k.cols != d || v.cols != d {
        return Err(Error::ShapeMismatch(format!(
            "sda expects matching q/k/v, got {}x{} {}x{} {}x{}",
            q.rows, q.cols, k.rows, k.cols, v.rows, v.cols
        )));
    }
    if heads == 0 || d % heads != 0 {
        return Err(Error::InvalidSpec(format!("{heads} heads do not divide dim {d}")));
    }
    let dh = d / heads;
    let scale = E::from_f64(1.0 / (dh as f64).sqrt());
    let mut out = Mat::zeros(t, d);
    let mut scores = Mat::zeros(t, t);
    for h in 0..heads {
        let lo = h * dh;
        for i in 0..t {
            let qrow = &q.row(i)[lo..lo + dh];
            let srow = scores.row_mut(i);
            for j in 0..t {
                srow[j] = dot_unrolled(qrow, &k.row(j)[lo..lo + dh]) * scale;
            }
        }
        softmax_rows_inplace(&mut scores);
        for i in 0..t {
            let arow = scores.row(i);
            let obase = i * d + lo;
            let orow = &mut out.data[obase..obase + dh];
            for j in 0..t {
                let a = arow[j];
                let vrow = &v.row(j)[lo..lo + dh];
                for (o, &vv) in orow.iter_mut().zip(vrow) {
                    *o += a * vv;
                }
            }
        }
    }
    Ok(out)
}

/// Eight-lane dot product; the tail runs in plain ascending order, so short
/// vectors (under eight elements) accumulate exactly like a naive loop.
fn dot_unrolled<E: Elem>(a: &[E], b: &[E]) -> E {
    let mut acc = [E::ZERO; 8];
    let mut i = 0;
    while i + 8 <= a.len() {
        for l in 0..8 {
            acc[l] += a[i + l] * b[i + l];
        }
        i += 8;
    }
    let mut tail = E::ZERO;
    while i < a.len() {
        tail += a[i] * b[i];
        i += 1;
    }
    ((acc[0] + acc[1]) + (acc[2] + acc[3])) + ((acc[4] + acc[5]) + (acc[6] + acc[7])) + tail
}

/// Gradients w.r.t. input, weights, and (when present) bias.
pub type WeightedGrads<X, W, E> = (X, W, Option<Vec<E>>);

pub fn conv2d_vjp<E: Elem>(
    x: &Tensor<E>,
    spec: &ConvSpec,
    w: &[E],
    ct: &Tensor<E>,
) -> Result<WeightedGrads<Tensor<E>, Vec<E>, E>> {
    check_input(x, spec)?;
    let (oh, ow) = spec.out_hw(x.h, x.w)?;
    if ct.shape() != (x.n, spec.out_channels, oh, ow) {
        return Err(Error::ShapeMismatch(format!(
            "cotangent shape {:?} does not match conv output {:?}",
            ct.shape(),
            (x.n, spec.out_channels, oh, ow)
        )));
    }
    let (k, s, p, g) = (spec.kernel, spec.stride, spec.padding, spec.groups);
    let cing = spec.in_channels / g;
    let coutg = spec.out_channels / g;
    let mut gx = Tensor::zeros(x.n, x.c, x.h, x.w);
    let mut gw = vec![E::ZERO; spec.weight_len()];
    for n in 0..x.n {
        for gi in 0..g {
            for col in 0..coutg {
                let co = gi * coutg + col;
                for oy in 0..oh {
                    for ox in 0..ow {
                        let cv = ct.at(n, co, oy, ox);
                        for cil in 0..cing {
                            let ci = gi * cing + cil;
                            for ky in 0..k {
                                let iy = oy * s + ky;
                                if iy < p || iy - p >= x.h {
                                    continue;
                                }
                                for kx in 0..k {
                                    let ix = ox * s + kx;
                                    if ix < p || ix - p >= x.w {
                                        continue;
                                    }
                                    let wi = ((co * cing + cil) * k + ky) * k + kx;
                                    *gx.at_mut(n, ci, iy - p, ix - p) += w[wi] * cv;
                                    gw[wi] += x.at(n, ci, iy - p, ix - p) * cv;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let gb = if spec.bias {
        let mut gb = vec![E::ZERO; spec.out_channels];
        for n in 0..x.n {
            for co in 0..spec.out_channels {
                let lo = ct.idx(n, co, 0, 0);
                for v in &ct.data[lo..lo + oh * ow] {
                    gb[co] += *v;
                }
            }
        }
        Some(gb)
    } else {
        None
    };
    Ok((gx, gw, gb))
}

pub fn transposed_conv2d_vjp<E: Elem>(
    x: &Tensor<E>,
    spec: &ConvSpec,
    w: &[E],
    ct: &Tensor<E>,
) -> Result<(Tensor<E>, Vec<E>)> {
    check_input(x, spec)?;
    let (oh, ow) = spec.out_hw(x.h, x.w)?;
    if ct.shape() != (x.n, spec.out_channels, oh, ow) {
        return Err(Error::ShapeMismatch(format!(
            "cotangent shape {:?} does not match transposed conv output {:?}",
            ct.shape(),
            (x.n, spec.out_channels, oh, ow)
        )));
    }
    let (k, s, p, g) = (spec.kernel, spec.stride, spec.padding, spec.groups);
    let cing = spec.in_channels / g;
    let coutg = spec.out_channels / g;
    let mut gx = Tensor::zeros(x.n, x.c, x.h, x.w);
    let mut gw = vec![E::ZERO; spec.weight_len()];
    for n in 0..x.n {
        for gi in 0..g {
            for cil in 0..cing {
                let ci = gi * cing + cil;
                for iy in 0..x.h {
                    for ix in 0..x.w {
                        let xv = x.at(n, ci, iy, ix);
                        let mut acc = E::ZERO;
                        for col in 0..coutg {
                            let co = gi * coutg + col;
                            for ky in 0..k {
                                let oy = iy * s + ky;
                                if oy < p || oy - p >= oh {
                                    continue;
                                }
                                for kx in 0..k {
                                    let ox = ix * s + kx;
                                    if ox < p || ox - p >= ow {
                                        continue;
                                    }
                                    let wi = ((ci * coutg + col) * k + ky) * k + kx;
                                    let cv = ct.at(n, co, oy - p, ox - p);
                                    acc += w[wi] * cv;
                                    gw[wi] += xv * cv;
                                }
                            }
                        }
                        *gx.at_mut(n, ci, iy, ix) += acc;
                    }
                }
            }
        }
    }
    Ok((gx, gw))
}

pub fn linear_vjp<E: Elem>(
    x: &Mat<E>,
    w: &Mat<E>,
    has_bias: bool,
    ct: &Mat<E>,
) -> Result<WeightedGrads<Mat<E>, Mat<E>, E>> {
    if ct.rows != x.rows || ct.cols != w.rows {
        return Err(Error::ShapeMismatch("linear cotangent shape".into()));
    }
    let mut gx = Mat::zeros(x.rows, x.cols);
    let mut gw = Mat::zeros(w.rows, w.cols);
    for r in 0..x.rows {
        for o in 0..w.rows {
            let cv = ct.at(r, o);
            for i in 0..x.cols {
                *gx.at_mut(r, i) += cv * w.at(o, i);
                *gw.at_mut(o, i) += cv * x.at(r, i);
            }
        }
    }
    let gb = if has_bias {
        let mut gb = vec![E::ZERO; w.rows];
        for r in 0..ct.rows {
            for o in 0..ct.cols {
                gb[o] += ct.at(r, o);
            }
        }
        Some(gb)
    } else {
        None
    };
    Ok((gx, gw, gb))
}

/// VJP of row softmax given the forward output `y`.
pub fn softmax_rows_vjp<E: Elem>(y: &Mat<E>, ct: &Mat<E>) -> Result<Mat<E>> {
    if y.rows != ct.rows || y.cols != ct.cols {
        return Err(Error::ShapeMismatch("softmax cotangent shape".into()));
    }
    let mut gx = Mat::zeros(y.rows, y.cols);
    for r in 0..y.rows {
        let mut dot = E::ZERO;
        for c in 0..y.cols {
            dot += ct.at(r, c) * y.at(r, c);
        }
        for c in 0..y.cols {
            *gx.at_mut(r, c) = y.at(r, c) * (ct.at(r, c) - dot);
        }
    }
    Ok(gx)
}

pub fn sda_vjp<E: Elem>(
    q: &Mat<E>,
    k: &Mat<E>,
    v: &Mat<E>,
    heads: usize,
    ct: &Mat<E>,
) -> Result<(Mat<E>, Mat<E>, Mat<E>)> {
    let t = q.rows;
    let d = q.cols;
    if ct.rows != t || ct.cols != d {
        return Err(Error::ShapeMismatch("sda cotangent shape".into()));
    }
    if heads == 0 || d % heads != 0 {
        return Err(Error::InvalidSpec(format!("{heads} heads do not divide dim {d}")));
    }
    let dh = d / heads;
    let scale = E::from_f64(1.0 / (dh as f64).sqrt());
    let mut gq = Mat::zeros(t, d);
    let mut gk = Mat::zeros(t, d);
    let mut gv = Mat::zeros(t, d);
    let mut scores = Mat::zeros(t, t);
    let mut ga = Mat::zeros(t, t);
    for h in 0..heads {
        let lo = h * dh;
        for i in 0..t {
            for j in 0..t {
                let mut acc = E::ZERO;
                for c in 0..dh {
                    acc += q.at(i, lo + c) * k.at(j, lo + c);
                }
                *scores.at_mut(i, j) = acc * scale;
            }
        }
        let attn = softmax_rows(&scores);
        for i in 0..t {
            for j in 0..t {
                let mut acc = E::ZERO;
                for c in 0..dh {
                    acc += ct.at(i, lo + c) * v.at(j, lo + c);
                    *gv.at_mut(j, lo + c) += attn.at(i, j) * ct.at(i, lo + c);
                }
                *ga.at_mut(i, j) = acc;
            }
        }
        let gs = softmax_rows_vjp(&attn, &ga)?;
        for i in 0..t {
            for j in 0..t {
                let gsv = gs.at(i, j) * scale;
                for c in 0..dh {
                    *gq.at_mut(i, lo + c) += gsv * k.at(j, lo + c);
                    *gk.at_mut(j, lo + c) += gsv * q.at(i, lo + c);
                }
            }
        }
    }
    Ok((gq, gk, gv))
}

/// VJP of channel-wise layer norm. Returns (gx, ggamma, gbeta).
pub fn layer_norm_vjp<E: Elem>(
    x: &Tensor<E>,
    spec: &NormSpec,
    params: &[E],
    ct: &Tensor<E>,
) -> Result<(Tensor<E>, Vec<E>, Vec<E>)> {
    if spec.kind != NormKind::Layer {
        return Err(Error::Unsupported("vjp only implemented for layer norm".into()));
    }
    if x.shape() != ct.shape() || x.c != spec.channels {
        return Err(Error::ShapeMismatch("layer norm cotangent shape".into()));
    }
    let c = spec.channels;
    let cf = E::from_f64(c as f64);
    let eps = E::from_f64(spec.eps);
    let gamma = &params[..c];
    let mut gx = Tensor::zeros(x.n, x.c, x.h, x.w);
    let mut ggamma = vec![E::ZERO; c];
    let mut gbeta = vec![E::ZERO; c];
    for n in 0..x.n {
        for yy in 0..x.h {
            for xx in 0..x.w {
                let mut mean = E::ZERO;
                for ci in 0..c {
                    mean += x.at(n, ci, yy, xx);
                }
                mean = mean / cf;
                let mut var = E::ZERO;
                for ci in 0..c {
                    let d = x.at(n, ci, yy, xx) - mean;
                    var += d * d;
                }
                var = var / cf;
                let inv = E::ONE / (var + eps).sqrt();
                let mut sum_gh = E::ZERO;
                let mut sum_gh_xhat = E::ZERO;
                for ci in 0..c {
                    let xhat = (x.at(n, ci, yy, xx) - mean) * inv;
                    let cv = ct.at(n, ci, yy, xx);
                    ggamma[ci] += cv * xhat;
                    gbeta[ci] += cv;
                    let gh = cv * gamma[ci];
                    sum_gh += gh;
                    sum_gh_xhat += gh * xhat;
                }
                let inv_c = E::ONE / cf;
                for ci in 0..c {
                    let xhat = (x.at(n, ci, yy, xx) - mean) * inv;
                    let gh = ct.at(n, ci, yy, xx) * gamma[ci];
                    *gx.at_mut(n, ci, yy, xx) =
                        (gh - sum_gh * inv_c - xhat * sum_gh_xhat * inv_c) * inv;
                }
            }
        }
    }
    Ok((gx, ggamma, gbeta))
}

pub fn activation_vjp<E: Elem>(x: &Tensor<E>, kind: ActivationKind, ct: &Tensor<E>) -> Result<Tensor<E>> {
    if x.shape() != ct.shape() {
        return Err(Error::ShapeMismatch("activation cotangent shape".into()));
    }
    let mut gx = Tensor::zeros(x.n, x.c, x.h, x.w);
    for (i, g) in gx.data.iter_mut().enumerate() {
        *g = activation_derivative(x.data[i], kind) * ct.data[i];
    }
    Ok(gx)
}

/// Central-difference gradient of a scalar function, used to validate VJPs.
pub fn finite_difference_gradient<F>(mut f: F, x: &[f64], step: f64) -> Vec<f64>
where
    F: FnMut(&[f64]) -> f64,
{
    let mut xp = x.to_vec();
    let mut grad = vec![0.0; x.len()];
    for i in 0..x.len() {
        let orig = xp[i];
        xp[i] = orig + step;
        let fp = f(&xp);
        xp[i] = orig - step;
        let fm = f(&xp);
        xp[i] = orig;
        grad[i] = (fp - fm) / (2.0 * step);
    }
    grad
}
