use crate::ops::{
    activation, conv2d, normalize, transposed_conv2d, ActivationKind, ConvSpec, NormKind,
    NormSpec,
};
use crate::tensor::{Mat, Tensor};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SDA_HEAD_DIM: usize = 32;
pub const RELU_HEAD_DIM: usize = 16;
pub const RELU_ATTN_EPS: f32 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub enum LayerSpec {
    Conv(ConvSpec),
    Norm(NormSpec),
    Act(ActivationKind),
    /// Scaled dot-product attention over the spatial plane. Consumes 3*dim
    /// channels (q, k, v stacked), emits dim channels at the same resolution.
    Sda { dim: usize, heads: usize },
    /// ReLU-kernel linear attention. Consumes 3*channels, emits channels.
    ReluLinear { channels: usize, head_dim: usize },
    GlobalPool,
}

impl LayerSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            LayerSpec::Conv(s) if s.transposed => "tconv",
            LayerSpec::Conv(_) => "conv",
            LayerSpec::Norm(s) => match s.kind {
                NormKind::BatchInference => "bn",
                NormKind::Layer => "ln",
            },
            LayerSpec::Act(_) => "act",
            LayerSpec::Sda { .. } => "sda",
            LayerSpec::ReluLinear { .. } => "relu_linear",
            LayerSpec::GlobalPool => "pool",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Layer {
    pub name: String,
    pub spec: LayerSpec,
    pub weights: Vec<f32>,
    pub bias: Option<Vec<f32>>,
}

#[derive(Debug, Clone)]
pub enum Item {
    Op(Layer),
    /// Push the current activation onto the residual stack.
    Save,
    /// Pop the residual stack and add it to the current activation.
    Add,
}

#[derive(Debug, Clone)]
pub struct ModelGraph {
    pub id: String,
    pub input_channels: usize,
    pub input_res: usize,
    pub items: Vec<Item>,
}

/// Head count targets head dim 32, falling back to the nearest smaller
/// count that divides the dim (attention cost is head-count independent).
pub fn sda_heads(dim: usize) -> Result<usize> {
    if dim == 0 {
        return Err(Error::InvalidSpec("attention dim 0".into()));
    }
    let mut heads = (dim / SDA_HEAD_DIM).max(1);
    while dim % heads != 0 {
        heads -= 1;
    }
    Ok(heads)
}

fn chw_to_tokens(x: &Tensor<f32>, n: usize, c_lo: usize, c_hi: usize) -> Mat<f32> {
    let tokens = x.h * x.w;
    let dim = c_hi - c_lo;
    let mut m = Mat::zeros(tokens, dim);
    for (ci, c) in (c_lo..c_hi).enumerate() {
        let base = x.idx(n, c, 0, 0);
        for t in 0..tokens {
            *m.at_mut(t, ci) = x.data[base + t];
        }
    }
    m
}

fn tokens_to_chw(m: &Mat<f32>, out: &mut Tensor<f32>, n: usize) {
    let tokens = out.h * out.w;
    for c in 0..out.c {
        let base = out.idx(n, c, 0, 0);
        for t in 0..tokens {
            out.data[base + t] = m.at(t, c);
        }
    }
}

fn sda_forward(x: &Tensor<f32>, dim: usize, heads: usize) -> Result<Tensor<f32>> {
    if x.c != 3 * dim {
        return Err(Error::ShapeMismatch(format!(
            "sda layer expects {} channels (3x{dim}), got {}",
            3 * dim,
            x.c
        )));
    }
    let mut y = Tensor::zeros(x.n, dim, x.h, x.w);
    for n in 0..x.n {
        let q = chw_to_tokens(x, n, 0, dim);
        let k = chw_to_tokens(x, n, dim, 2 * dim);
        let v = chw_to_tokens(x, n, 2 * dim, 3 * dim);
        let o = crate::ops::sda(&q, &k, &v, heads)?;
        tokens_to_chw(&o, &mut y, n);
    }
    Ok(y)
}

fn relu_linear_forward(x: &Tensor<f32>, channels: usize, head_dim: usize) -> Result<Tensor<f32>> {
    if x.c != 3 * channels {
        return Err(Error::ShapeMismatch(format!(
            "relu-linear layer expects {} channels (3x{channels}), got {}",
            3 * channels,
            x.c
        )));
    }
    if head_dim == 0 || channels % head_dim != 0 {
        return Err(Error::InvalidSpec(format!(
            "relu-linear head dim {head_dim} must divide {channels}"
        )));
    }
    let heads = channels / head_dim;
    let tokens = x.h * x.w;
    let mut y = Tensor::zeros(x.n, channels, x.h, x.w);
    for n in 0..x.n {
        let q = chw_to_tokens(x, n, 0, channels);
        let k = chw_to_tokens(x, n, channels, 2 * channels);
        let v = chw_to_tokens(x, n, 2 * channels, 3 * channels);
        let mut o = Mat::zeros(tokens, channels);
        let mut kv = vec![0f32; head_dim * head_dim];
        let mut z = vec![0f32; head_dim];
        for h in 0..heads {
            let lo = h * head_dim;
            kv.iter_mut().for_each(|v| *v = 0.0);
            z.iter_mut().for_each(|v| *v = 0.0);
            for t in 0..tokens {
                for i in 0..head_dim {
                    let kr = k.at(t, lo + i).max(0.0);
                    z[i] += kr;
                    for j in 0..head_dim {
                        kv[i * head_dim + j] += kr * v.at(t, lo + j);
                    }
                }
            }
            for t in 0..tokens {
                let mut den = RELU_ATTN_EPS;
                for i in 0..head_dim {
                    den += q.at(t, lo + i).max(0.0) * z[i];
                }
                for j in 0..head_dim {
                    let mut num = 0f32;
                    for i in 0..head_dim {
                        num += q.at(t, lo + i).max(0.0) * kv[i * head_dim + j];
                    }
                    *o.at_mut(t, lo + j) = num / den;
                }
            }
        }
        tokens_to_chw(&o, &mut y, n);
    }
    Ok(y)
}

impl Layer {
    pub fn forward(&self, x: &Tensor<f32>) -> Result<Tensor<f32>> {
        match &self.spec {
            LayerSpec::Conv(spec) => {
                if spec.transposed {
                    transposed_conv2d(x, spec, &self.weights)
                } else {
                    conv2d(x, spec, &self.weights, self.bias.as_deref())
                }
            }
            LayerSpec::Norm(spec) => normalize(x, spec, &self.weights),
            LayerSpec::Act(kind) => Ok(activation(x, *kind)),
            LayerSpec::Sda { dim, heads } => sda_forward(x, *dim, *heads),
            LayerSpec::ReluLinear { channels, head_dim } => {
                relu_linear_forward(x, *channels, *head_dim)
            }
            LayerSpec::GlobalPool => Ok(crate::ops::global_avg_pool(x)),
        }
    }
}

impl ModelGraph {
    pub fn forward(&self, x: &Tensor<f32>) -> Result<Tensor<f32>> {
        if x.c != self.input_channels {
            return Err(Error::ShapeMismatch(format!(
                "{} expects {} input channels, got {}",
                self.id, self.input_channels, x.c
            )));
        }
        let mut cur = x.clone();
        let mut stack: Vec<Tensor<f32>> = Vec::new();
        for item in &self.items {
            match item {
                Item::Save => stack.push(cur.clone()),
                Item::Add => {
                    let r = stack.pop().ok_or_else(|| {
                        Error::InvalidSpec(format!("{}: residual stack underflow", self.id))
                    })?;
                    if r.shape() != cur.shape() {
                        return Err(Error::ShapeMismatch(format!(
                            "{}: residual {:?} vs branch {:?}",
                            self.id,
                            r.shape(),
                            cur.shape()
                        )));
                    }
                    for (a, b) in cur.data.iter_mut().zip(r.data.iter()) {
                        *a += *b;
                    }
                }
                Item::Op(layer) => {
                    cur = layer.forward(&cur).map_err(|e| {
                        Error::InvalidSpec(format!("{} at layer '{}': {e}", self.id, layer.name))
                    })?;
                }
            }
        }
        Ok(cur)
    }

    /// Forward to class logits: expects the graph to end at (n, classes, 1, 1).
    pub fn logits(&self, x: &Tensor<f32>) -> Result<Vec<Vec<f32>>> {
        let y = self.forward(x)?;
        if y.h != 1 || y.w != 1 {
            return Err(Error::ShapeMismatch(format!(
                "{} output is {}x{} spatial, not pooled logits",
                self.id, y.h, y.w
            )));
        }
        let mut rows = Vec::with_capacity(y.n);
        for n in 0..y.n {
            let lo = y.idx(n, 0, 0, 0);
            rows.push(y.data[lo..lo + y.c].to_vec());
        }
        Ok(rows)
    }

    pub fn seeded_input(&self, batch: usize, res: usize, seed: u64) -> Tensor<f32> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = Tensor::zeros(batch, self.input_channels, res, res);
        for v in t.data.iter_mut() {
            *v = rng.gen::<f32>() * 2.0 - 1.0;
        }
        t
    }
}

/// Accumulates layers with deterministic seeded init. Init is uniform
/// +-sqrt(3/fan_in) (unit-variance preserving without nonlinearity gain),
/// norms start as identity.
pub struct GraphBuilder {
    items: Vec<Item>,
    rng: ChaCha8Rng,
}

impl GraphBuilder {
    pub fn new(seed: u64) -> Self {
        GraphBuilder { items: Vec::new(), rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn uniform(&mut self, len: usize, bound: f32) -> Vec<f32> {
        (0..len).map(|_| (self.rng.gen::<f32>() * 2.0 - 1.0) * bound).collect()
    }

    pub fn conv(&mut self, name: impl Into<String>, spec: ConvSpec) -> &mut Self {
        let fan_in = (spec.in_channels / spec.groups) * spec.kernel * spec.kernel;
        let bound = (3.0 / fan_in as f32).sqrt();
        let weights = self.uniform(spec.weight_len(), bound);
        let bias = if spec.bias { Some(vec![0f32; spec.out_channels]) } else { None };
        self.items.push(Item::Op(Layer { name: name.into(), spec: LayerSpec::Conv(spec), weights, bias }));
        self
    }

    pub fn norm(&mut self, name: impl Into<String>, spec: NormSpec) -> &mut Self {
        let c = spec.channels;
        let mut params = vec![0f32; spec.param_len()];
        params[..c].iter_mut().for_each(|v| *v = 1.0);
        if spec.kind == NormKind::BatchInference {
            params[3 * c..].iter_mut().for_each(|v| *v = 1.0);
        }
        self.items.push(Item::Op(Layer {
            name: name.into(),
            spec: LayerSpec::Norm(spec),
            weights: params,
            bias: None,
        }));
        self
    }

    pub fn act(&mut self, name: impl Into<String>, kind: ActivationKind) -> &mut Self {
        self.items.push(Item::Op(Layer {
            name: name.into(),
            spec: LayerSpec::Act(kind),
            weights: Vec::new(),
            bias: None,
        }));
        self
    }

    pub fn sda(&mut self, name: impl Into<String>, dim: usize) -> Result<&mut Self> {
        let heads = sda_heads(dim)?;
        self.items.push(Item::Op(Layer {
            name: name.into(),
            spec: LayerSpec::Sda { dim, heads },
            weights: Vec::new(),
            bias: None,
        }));
        Ok(self)
    }

    pub fn relu_linear(&mut self, name: impl Into<String>, channels: usize) -> &mut Self {
        self.items.push(Item::Op(Layer {
            name: name.into(),
            spec: LayerSpec::ReluLinear { channels, head_dim: RELU_HEAD_DIM },
            weights: Vec::new(),
            bias: None,
        }));
        self
    }

    pub fn pool(&mut self, name: impl Into<String>) -> &mut Self {
        self.items.push(Item::Op(Layer {
            name: name.into(),
            spec: LayerSpec::GlobalPool,
            weights: Vec::new(),
            bias: None,
        }));
        self
    }

    pub fn save(&mut self) -> &mut Self {
        self.items.push(Item::Save);
        self
    }

    pub fn add(&mut self) -> &mut Self {
        self.items.push(Item::Add);
        self
    }

    pub fn finish(self, id: impl Into<String>, input_channels: usize, input_res: usize) -> ModelGraph {
        ModelGraph { id: id.into(), input_channels, input_res, items: self.items }
    }
}
