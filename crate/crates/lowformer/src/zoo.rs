//! Model registry: the LowFormer backbone family, its ablation variants, and
//! the toy architectures used by the hardware-efficiency experiments.

use crate::blocks::{
    body_mbconv, head, lowtention, mbconv, mhsa_block, mlp_block, relu_linear_block, GAMMA,
};
use crate::graph::{GraphBuilder, ModelGraph};
use crate::ops::{ActivationKind, ConvSpec, NormSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttnOverride {
    ReluLinear,
    Mhsa,
}

#[derive(Debug, Clone)]
pub struct BackboneCfg {
    pub widths: [usize; 5],
    pub depths: [usize; 5],
    pub depth_delta: i64,
    pub mlp_on: bool,
    pub attn_on: bool,
    pub attn_override: Option<AttnOverride>,
    pub gamma: usize,
    pub n4: usize,
    pub unfuse: bool,
}

impl BackboneCfg {
    fn new(widths: [usize; 5], depths: [usize; 5]) -> Self {
        BackboneCfg {
            widths,
            depths,
            depth_delta: 0,
            mlp_on: true,
            attn_on: true,
            attn_override: None,
            gamma: GAMMA,
            n4: 2,
            unfuse: false,
        }
    }
}

fn b0() -> BackboneCfg {
    BackboneCfg::new([16, 32, 64, 128, 256], [0, 0, 0, 3, 4])
}
fn b1() -> BackboneCfg {
    BackboneCfg::new([16, 32, 64, 128, 256], [0, 0, 0, 5, 5])
}
fn b1_5() -> BackboneCfg {
    BackboneCfg::new([20, 40, 80, 160, 320], [0, 0, 0, 6, 6])
}
fn b2() -> BackboneCfg {
    BackboneCfg::new([24, 48, 96, 192, 384], [0, 0, 0, 6, 6])
}
fn b3() -> BackboneCfg {
    BackboneCfg::new([32, 64, 128, 256, 512], [1, 1, 2, 6, 6])
}

fn backbone_cfg(key: &str) -> Option<BackboneCfg> {
    Some(match key {
        "b0" => b0(),
        "b1" => b1(),
        "b1.5" => b1_5(),
        "b2" => b2(),
        "b3" | "b3-r192" => b3(),
        "e1" => BackboneCfg { depth_delta: -2, mlp_on: false, attn_on: false, ..b1_5() },
        "e2" => BackboneCfg { depth_delta: -2, mlp_on: false, attn_on: false, ..b3() },
        "e3" => BackboneCfg { mlp_on: false, ..b3() },
        "b1-unfused" => BackboneCfg { unfuse: true, ..b1() },
        "b1-relu-linear" => BackboneCfg { attn_override: Some(AttnOverride::ReluLinear), ..b1() },
        "b1-mhsa" => BackboneCfg { attn_override: Some(AttnOverride::Mhsa), ..b1() },
        "b1-highres" => BackboneCfg { n4: 1, ..b1() },
        "b1-nocompr" => BackboneCfg { gamma: 1, ..b1() },
        _ => return None,
    })
}

pub fn stage_resolutions(res_in: usize) -> [usize; 5] {
    [res_in / 2, res_in / 4, res_in / 8, res_in / 16, res_in / 32]
}

pub fn build_backbone(id: &str, cfg: &BackboneCfg, res_in: usize, seed: u64) -> Result<ModelGraph> {
    if res_in == 0 || res_in % 32 != 0 {
        return Err(Error::InvalidSpec(format!(
            "backbone resolution {res_in} must be a positive multiple of 32"
        )));
    }
    if (res_in / 16) % cfg.n4 != 0 {
        return Err(Error::InvalidSpec(format!(
            "resolution {res_in} incompatible with attention downsample {}",
            cfg.n4
        )));
    }
    let w = cfg.widths;
    let mut b = GraphBuilder::new(seed);
    b.conv("stem.conv", ConvSpec::conv(3, w[0], 3, 2));
    b.norm("stem.bn", NormSpec::batch(w[0]));
    b.act("stem.act", ActivationKind::Hardswish);
    for i in 0..5 {
        if i > 0 {
            mbconv(&mut b, &format!("s{i}.down"), w[i - 1], w[i], 6, i <= 2 && !cfg.unfuse, 2);
        }
        if i < 3 {
            for j in 0..cfg.depths[i] {
                mbconv(&mut b, &format!("s{i}.b{j}"), w[i], w[i], 4, !cfg.unfuse, 1);
            }
        } else {
            let n = if i == 3 { cfg.n4 } else { 1 };
            let last = i == 4;
            let count = (cfg.depths[i] as i64 + cfg.depth_delta).max(0) as usize;
            for j in 0..count {
                let p = format!("s{i}.b{j}");
                body_mbconv(&mut b, &format!("{p}.mb"), w[i], last, cfg.unfuse);
                if cfg.attn_override == Some(AttnOverride::ReluLinear) {
                    relu_linear_block(&mut b, &format!("{p}.attn"), w[i]);
                    continue;
                }
                if cfg.attn_on {
                    if cfg.attn_override == Some(AttnOverride::Mhsa) {
                        mhsa_block(&mut b, &format!("{p}.attn"), w[i])?;
                    } else {
                        lowtention(&mut b, &format!("{p}.attn"), w[i], n, cfg.gamma, cfg.unfuse)?;
                    }
                    b.norm(format!("{p}.attnln"), NormSpec::layer(w[i]));
                }
                if cfg.mlp_on {
                    mlp_block(&mut b, &format!("{p}.mlp"), w[i], last);
                    b.norm(format!("{p}.mlpln"), NormSpec::layer(w[i]));
                }
            }
        }
    }
    head(&mut b, w[4], 1000);
    Ok(b.finish(id, 3, res_in))
}

// Grouped-vs-ungrouped toy pairs: (ungrouped widths, depthwise widths).
const GROUP_CH: [([usize; 5], [usize; 5]); 3] = [
    ([15, 30, 60, 120, 240], [30, 60, 120, 240, 480]),
    ([30, 50, 100, 160, 160], [60, 120, 240, 480, 480]),
    ([30, 60, 150, 240, 240], [60, 180, 360, 720, 720]),
];
// Per-stage layer counts chosen so each pair lands on its published MAC total.
const GROUP_L: [[usize; 5]; 3] = [[1, 3, 4, 6, 2], [1, 5, 3, 3, 2], [3, 1, 3, 5, 4]];

pub fn grouping_layer_counts(gid: usize) -> Option<[usize; 5]> {
    GROUP_L.get(gid - 1).copied()
}

pub fn build_grouping(id: &str, gid: usize, depthwise: bool, res_in: usize, seed: u64) -> Result<ModelGraph> {
    if gid == 0 || gid > 3 {
        return Err(Error::InvalidSpec(format!("grouping pair {gid} out of range")));
    }
    if res_in == 0 || res_in % 32 != 0 {
        return Err(Error::InvalidSpec(format!(
            "grouping toy resolution {res_in} must be a positive multiple of 32"
        )));
    }
    let (chu, chd) = GROUP_CH[gid - 1];
    let ch = if depthwise { chd } else { chu };
    let l = GROUP_L[gid - 1];
    let mut b = GraphBuilder::new(seed);
    let mut prev = 3;
    for i in 0..5 {
        let g = if depthwise { prev } else { 1 };
        b.conv(
            format!("s{i}.down"),
            ConvSpec { groups: g, ..ConvSpec::conv(prev, ch[i], 3, 2) },
        );
        b.act(format!("s{i}.down.act"), ActivationKind::Relu);
        let nl = if depthwise { 2 * l[i] } else { l[i] };
        for j in 0..nl {
            b.conv(
                format!("s{i}.b{j}"),
                ConvSpec {
                    groups: if depthwise { ch[i] } else { 1 },
                    ..ConvSpec::conv(ch[i], ch[i], 3, 1)
                },
            );
            b.act(format!("s{i}.b{j}.act"), ActivationKind::Relu);
        }
        prev = ch[i];
    }
    head(&mut b, ch[4], 1000);
    Ok(b.finish(id, 3, res_in))
}

/// Resolution-vs-channel scenario pairs: (high-res low-channel, low-res
/// high-channel), matched so both sides cost nearly identical MACs.
pub const CONV_SCENARIOS: [((usize, usize), (usize, usize)); 7] = [
    ((224, 24), (28, 196)),
    ((224, 48), (112, 96)),
    ((224, 96), (56, 384)),
    ((224, 48), (56, 196)),
    ((112, 24), (14, 196)),
    ((56, 96), (14, 384)),
    ((112, 96), (28, 384)),
];

pub const CONV_STACK_DEPTH: usize = 20;

pub fn build_convstack(id: &str, scenario: usize, hires: bool, depth: usize, seed: u64) -> Result<ModelGraph> {
    if scenario == 0 || scenario > CONV_SCENARIOS.len() {
        return Err(Error::InvalidSpec(format!("conv stack scenario {scenario} out of range")));
    }
    if depth == 0 {
        return Err(Error::InvalidSpec("conv stack depth must be at least 1".into()));
    }
    let (hi, lo) = CONV_SCENARIOS[scenario - 1];
    let (res, ch) = if hires { hi } else { lo };
    let mut b = GraphBuilder::new(seed);
    for j in 0..depth {
        b.conv(format!("b{j}"), ConvSpec::conv(ch, ch, 3, 1));
        b.act(format!("b{j}.act"), ActivationKind::Relu);
    }
    head(&mut b, ch, 1000);
    Ok(b.finish(id, ch, res))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttnKind {
    Mhsa,
    Chcompr,
    ConvLow,
    ConvLowCh,
}

impl AttnKind {
    pub fn key(self) -> &'static str {
        match self {
            AttnKind::Mhsa => "mhsa",
            AttnKind::Chcompr => "chcompr",
            AttnKind::ConvLow => "convlow",
            AttnKind::ConvLowCh => "convlowch",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "mhsa" => AttnKind::Mhsa,
            "chcompr" => AttnKind::Chcompr,
            "convlow" => AttnKind::ConvLow,
            "convlowch" => AttnKind::ConvLowCh,
            _ => return None,
        })
    }
}

pub const ATTN_STACK_DIM: usize = 128;
pub const ATTN_STACK_DEPTH: usize = 4;
pub const ATTN_STACK_RESOLUTIONS: [usize; 4] = [8, 16, 32, 64];

pub fn build_attn_stack(id: &str, kind: AttnKind, res: usize, dim: usize, depth: usize, seed: u64) -> Result<ModelGraph> {
    let needs_down = matches!(kind, AttnKind::ConvLow | AttnKind::ConvLowCh);
    if res == 0 || (needs_down && res % 2 != 0) {
        return Err(Error::InvalidSpec(format!(
            "attention stack resolution {res} invalid for kind {}",
            kind.key()
        )));
    }
    if dim % 2 != 0 {
        return Err(Error::InvalidSpec(format!("attention stack dim {dim} must be even")));
    }
    let d = dim / 2;
    let mut b = GraphBuilder::new(seed);
    for j in 0..depth {
        let p = format!("b{j}");
        match kind {
            AttnKind::Mhsa => {
                mhsa_block(&mut b, &p, dim)?;
            }
            AttnKind::Chcompr => {
                b.save();
                b.conv(format!("{p}.qkv"), ConvSpec::pointwise(dim, 3 * d));
                b.sda(format!("{p}.sda"), d)?;
                b.conv(format!("{p}.proj"), ConvSpec::pointwise(d, dim));
                b.add();
            }
            AttnKind::ConvLow => {
                b.save();
                b.conv(format!("{p}.down"), ConvSpec::depthwise(dim, 3, 2));
                mhsa_block(&mut b, &format!("{p}.attn"), dim)?;
                b.conv(format!("{p}.up"), ConvSpec::transposed_depthwise(dim, 3, 2));
                b.add();
            }
            AttnKind::ConvLowCh => {
                b.save();
                b.conv(format!("{p}.down"), ConvSpec::depthwise(dim, 3, 2));
                b.save();
                b.conv(format!("{p}.qkv"), ConvSpec::pointwise(dim, 3 * d));
                b.sda(format!("{p}.sda"), d)?;
                b.conv(format!("{p}.proj"), ConvSpec::pointwise(d, dim));
                b.add();
                b.conv(format!("{p}.up"), ConvSpec::transposed_depthwise(dim, 3, 2));
                b.add();
            }
        }
    }
    head(&mut b, dim, 1000);
    Ok(b.finish(id, dim, res))
}

pub fn build_mbconv_probe(id: &str, ch: usize, res: usize, fused: bool, depth: usize, seed: u64) -> Result<ModelGraph> {
    if ch == 0 || res == 0 || depth == 0 {
        return Err(Error::InvalidSpec("degenerate mbconv probe".into()));
    }
    let mut b = GraphBuilder::new(seed);
    for j in 0..depth {
        mbconv(&mut b, &format!("b{j}"), ch, ch, 4, fused, 1);
    }
    head(&mut b, ch, 1000);
    Ok(b.finish(id, ch, res))
}

#[derive(Debug, Clone)]
enum Kind {
    Backbone(&'static str),
    Grouping { gid: usize, depthwise: bool },
    ConvStack { scenario: usize, hires: bool },
    AttnStack { kind: AttnKind },
    MbconvProbe { fused: bool },
}

#[derive(Debug, Clone)]
pub struct ModelEntry {
    pub id: String,
    pub family: &'static str,
    pub default_res: usize,
    pub input_channels: usize,
    pub summary: String,
    kind: Kind,
}

pub fn registry() -> Vec<ModelEntry> {
    let mut out = Vec::new();
    let backbones: [(&str, usize, &str); 14] = [
        ("b0", 224, "hybrid backbone, smallest"),
        ("b1", 224, "hybrid backbone, base"),
        ("b1.5", 224, "hybrid backbone, wider/deeper"),
        ("b2", 224, "hybrid backbone, large"),
        ("b3", 224, "hybrid backbone, largest"),
        ("b3-r192", 192, "b3 evaluated at 192 input"),
        ("e1", 224, "edge variant of b1.5: no attention, no MLP, two fewer blocks per stage"),
        ("e2", 224, "edge variant of b3: no attention, no MLP, two fewer blocks per stage"),
        ("e3", 224, "edge variant of b3: MLPs removed"),
        ("b1-unfused", 224, "b1 ablation: all fused convolutions unfused"),
        ("b1-relu-linear", 224, "b1 ablation: attention replaced by ReLU linear attention"),
        ("b1-mhsa", 224, "b1 ablation: attention replaced by full-resolution MHSA"),
        ("b1-highres", 224, "b1 ablation: no spatial downsampling in stage-4 attention"),
        ("b1-nocompr", 224, "b1 ablation: no channel compression in attention"),
    ];
    for (key, res, summary) in backbones {
        out.push(ModelEntry {
            id: format!("lowformer-{key}"),
            family: "lowformer",
            default_res: res,
            input_channels: 3,
            summary: summary.to_string(),
            kind: Kind::Backbone(key),
        });
    }
    for gid in 1..=3usize {
        for (depthwise, tag) in [(false, "ungrouped"), (true, "depthwise")] {
            let idx = 2 * gid - if depthwise { 0 } else { 1 };
            out.push(ModelEntry {
                id: format!("toy-grouping-{idx}"),
                family: "grouping",
                default_res: 224,
                input_channels: 3,
                summary: format!("conv grouping pair {gid}, {tag} side"),
                kind: Kind::Grouping { gid, depthwise },
            });
        }
    }
    for s in 1..=CONV_SCENARIOS.len() {
        let (hi, lo) = CONV_SCENARIOS[s - 1];
        for (hires, (res, ch), tag) in [(true, hi, "hires"), (false, lo, "hichan")] {
            out.push(ModelEntry {
                id: format!("toy-convstack-{s}-{tag}"),
                family: "convstack",
                default_res: res,
                input_channels: ch,
                summary: format!("20x 3x3 conv stack, {ch} channels at {res}x{res}"),
                kind: Kind::ConvStack { scenario: s, hires },
            });
        }
    }
    for kind in [AttnKind::Mhsa, AttnKind::Chcompr, AttnKind::ConvLow, AttnKind::ConvLowCh] {
        for res in ATTN_STACK_RESOLUTIONS {
            out.push(ModelEntry {
                id: format!("attn-stack-{}-{res}", kind.key()),
                family: "attention",
                default_res: res,
                input_channels: ATTN_STACK_DIM,
                summary: format!("4x {} block at dim {} on {res}x{res}", kind.key(), ATTN_STACK_DIM),
                kind: Kind::AttnStack { kind },
            });
        }
    }
    for fused in [true, false] {
        out.push(ModelEntry {
            id: format!("mbconv-probe-64-56-{}", if fused { "fused" } else { "unfused" }),
            family: "mbconv",
            default_res: 56,
            input_channels: 64,
            summary: format!(
                "single {} MBConv (e4, 64 channels) at 56x56",
                if fused { "fused" } else { "unfused" }
            ),
            kind: Kind::MbconvProbe { fused },
        });
    }
    out
}

pub fn model_ids() -> Vec<String> {
    registry().into_iter().map(|e| e.id).collect()
}

fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

pub fn suggestions(id: &str) -> Vec<String> {
    let mut scored: Vec<(usize, String)> =
        model_ids().into_iter().map(|m| (levenshtein(id, &m), m)).collect();
    scored.sort();
    scored.into_iter().take(3).map(|(_, m)| m).collect()
}

pub fn find(id: &str) -> Result<ModelEntry> {
    registry()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownModel { id: id.to_string(), suggestions: suggestions(id) })
}

/// Build a registry model. `res` overrides the model's default input
/// resolution where the architecture allows it.
pub fn build(id: &str, res: Option<usize>, seed: u64) -> Result<ModelGraph> {
    let entry = find(id)?;
    let res = res.unwrap_or(entry.default_res);
    match entry.kind {
        Kind::Backbone(key) => {
            let cfg = backbone_cfg(key)
                .ok_or_else(|| Error::InvalidSpec(format!("no backbone config for {key}")))?;
            build_backbone(id, &cfg, res, seed)
        }
        Kind::Grouping { gid, depthwise } => build_grouping(id, gid, depthwise, res, seed),
        Kind::ConvStack { scenario, hires } => {
            build_convstack(id, scenario, hires, CONV_STACK_DEPTH, seed)
        }
        Kind::AttnStack { kind } => {
            build_attn_stack(id, kind, res, ATTN_STACK_DIM, ATTN_STACK_DEPTH, seed)
        }
        Kind::MbconvProbe { fused } => build_mbconv_probe(id, 64, res, fused, 1, seed),
    }
}
