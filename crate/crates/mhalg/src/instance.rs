//! Building instances from input files and loading them back.

use mhalg_core::algebra::{make_base_embedding, EmbeddingKind};
use mhalg_core::constructions::{
    convolution_algebroid, convolution_star, crossed_product_algebroid, function_algebroid, function_algebroid_of_category,
    function_star, make_fin_hopf, tensor_algebroid, ActionData, FinHopf, FiniteCategory, FiniteGroupoid,
};
use mhalg_core::error::Error as CoreError;
use mhalg_core::field::{Field, FieldTag};
use mhalg_core::hopf::{MultiplierBialgebroid, StarStructure};

use crate::error::CliError;
use crate::format::*;

/// What `build` constructs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildKind {
    GroupoidFn,
    GroupoidConv,
    Tensor,
    Crossed,
}

impl BuildKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BuildKind::GroupoidFn => "groupoid-fn",
            BuildKind::GroupoidConv => "groupoid-conv",
            BuildKind::Tensor => "tensor",
            BuildKind::Crossed => "crossed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [BuildKind::GroupoidFn, BuildKind::GroupoidConv, BuildKind::Tensor, BuildKind::Crossed]
            .into_iter()
            .find(|k| k.as_str() == s)
    }
}

pub fn parse_field(s: &str) -> Result<FieldTag, CliError> {
    match s {
        "q" => Ok(FieldTag::Q),
        "qi" => Ok(FieldTag::QI),
        other => Err(CliError::Usage(format!("unknown field {:?}; expected q or qi", other))),
    }
}

fn category_tables(g: &GroupoidDto) -> (Vec<(String, String, String)>, Option<Vec<(String, String, String)>>) {
    let arrows = g.arrows.iter().map(|a| (a.id.clone(), a.src.clone(), a.tgt.clone())).collect();
    let compose = g.compose.as_ref().map(|c| c.iter().map(|e| (e.left.clone(), e.right.clone(), e.result.clone())).collect());
    (arrows, compose)
}

/// Parses and fully validates a groupoid file.
pub fn parse_groupoid(text: &str) -> Result<FiniteGroupoid, CliError> {
    let dto: GroupoidDto = from_json(text)?;
    let (arrows, compose) = category_tables(&dto);
    let inverse = dto.inverse.as_ref().map(|v| v.iter().map(|e| (e.arrow.clone(), e.result.clone())).collect());
    Ok(FiniteGroupoid::from_tables(dto.objects.clone(), arrows, compose, inverse)?)
}

fn parse_category(text: &str) -> Result<FiniteCategory, CliError> {
    let dto: GroupoidDto = from_json(text)?;
    let (arrows, compose) = category_tables(&dto);
    Ok(FiniteCategory::new(dto.objects.clone(), arrows, compose)?)
}

fn encode_instance<F: Field>(kind: BuildKind, descriptor: String, mb: &MultiplierBialgebroid<F>, star: Option<&StarStructure<F>>) -> InstanceDto {
    InstanceDto {
        schema: String::from(INSTANCE_SCHEMA),
        field: String::from(F::TAG.as_str()),
        kind: String::from(kind.as_str()),
        descriptor,
        algebra: AlgebraDto::encode(&mb.a),
        base_b: AlgebraDto::encode(mb.b()),
        base_c: AlgebraDto::encode(mb.c()),
        iota_b: mb.iota_b.images.iter().map(MultiplierDto::encode).collect(),
        iota_c: mb.iota_c.images.iter().map(MultiplierDto::encode).collect(),
        s_b: MatrixDto::encode(&mb.s_b),
        s_c: MatrixDto::encode(&mb.s_c),
        tl: MatrixDto::encode(&mb.left.tl),
        tr: MatrixDto::encode(&mb.left.tr),
        lt: MatrixDto::encode(&mb.right.lt),
        rt: MatrixDto::encode(&mb.right.rt),
        star: star.map(|s| StarDto {
            star_a: MatrixDto::encode(&s.star_a),
            star_b: MatrixDto::encode(&s.star_b),
            star_c: MatrixDto::encode(&s.star_c),
        }),
    }
}

fn decode_hopf<F: Field>(h: &HopfDto) -> Result<FinHopf<F>, CliError> {
    match h {
        HopfDto::Group { group } => {
            let index = |x: &String| {
                group.elements.iter().position(|e| e == x).ok_or_else(|| CliError::Parse(format!("unknown group element {:?}", x)))
            };
            let table = group
                .table
                .iter()
                .map(|row| row.iter().map(index).collect::<Result<Vec<usize>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(make_fin_hopf(group.elements.clone(), &table)?)
        }
        HopfDto::General { algebra, comult, counit, antipode } => {
            Ok(FinHopf::new(algebra.decode()?, comult.decode()?, counit.decode()?, antipode.decode()?)?)
        }
    }
}

fn build_typed<F: Field>(kind: BuildKind, text: &str, allow_non_groupoid: bool) -> Result<InstanceDto, CliError> {
    let with_star = F::TAG == FieldTag::QI;
    match kind {
        BuildKind::GroupoidFn | BuildKind::GroupoidConv => {
            let g = match parse_groupoid(text) {
                Ok(g) => g,
                Err(CliError::Invalid(CoreError::NotAGroupoid(w))) if kind == BuildKind::GroupoidFn && allow_non_groupoid => {
                    let cat = parse_category(text)?;
                    let mb = function_algebroid_of_category::<F>(&cat)?;
                    let desc = format!(
                        "function algebra of a category with {} objects and {} arrows (not a groupoid: {})",
                        cat.num_objects(),
                        cat.num_arrows(),
                        w
                    );
                    return Ok(encode_instance(kind, desc, &mb, None));
                }
                Err(e) => return Err(e),
            };
            let (p, n) = (g.category().num_objects(), g.category().num_arrows());
            if kind == BuildKind::GroupoidFn {
                let mb = function_algebroid::<F>(&g)?;
                let star = with_star.then(|| function_star::<F>(&g));
                let desc = format!("function algebroid of a groupoid with {} objects and {} arrows", p, n);
                Ok(encode_instance(kind, desc, &mb, star.as_ref()))
            } else {
                let mb = convolution_algebroid::<F>(&g)?;
                let star = with_star.then(|| convolution_star::<F>(&g));
                let desc = format!("convolution algebroid of a groupoid with {} objects and {} arrows", p, n);
                Ok(encode_instance(kind, desc, &mb, star.as_ref()))
            }
        }
        BuildKind::Tensor => {
            let dto: TensorInputDto = from_json(text)?;
            let (b, c) = (dto.b.decode::<F>()?, dto.c.decode::<F>()?);
            let mb = tensor_algebroid(&b, &c, &dto.s_b.decode()?, &dto.s_c.decode()?)?;
            let desc = format!("tensor product C⊗B with dim B = {}, dim C = {}", b.dim(), c.dim());
            Ok(encode_instance(kind, desc, &mb, None))
        }
        BuildKind::Crossed => {
            let dto: CrossedInputDto = from_json(text)?;
            let (b, c) = (dto.b.decode::<F>()?, dto.c.decode::<F>()?);
            let h = decode_hopf::<F>(&dto.hopf)?;
            let act = ActionData {
                left: dto.action.left.iter().map(|m| m.decode()).collect::<Result<_, _>>()?,
                right: dto.action.right.iter().map(|m| m.decode()).collect::<Result<_, _>>()?,
            };
            let mb = crossed_product_algebroid(&b, &c, &dto.s_b.decode()?, &dto.s_c.decode()?, &h, &act)?;
            let desc = format!("crossed product C⊗H⊗B with dim B = {}, dim H = {}, dim C = {}", b.dim(), h.dim(), c.dim());
            Ok(encode_instance(kind, desc, &mb, None))
        }
    }
}

/// Builds an instance from the text of an input file.
pub fn build(kind: BuildKind, text: &str, field: FieldTag, allow_non_groupoid: bool) -> Result<InstanceDto, CliError> {
    use mhalg_core::field::{GaussianRational, Rational};
    match field {
        FieldTag::Q => build_typed::<Rational>(kind, text, allow_non_groupoid),
        FieldTag::QI => build_typed::<GaussianRational>(kind, text, allow_non_groupoid),
    }
}

/// A loaded instance, before any axiom has been checked.
pub struct Loaded<F> {
    pub mb: MultiplierBialgebroid<F>,
    pub star: Option<StarStructure<F>>,
}

/// Rebuilds the structure of an instance file. Shapes, the algebras and the
/// embeddings are validated; the axioms are not.
pub fn load<F: Field>(dto: &InstanceDto) -> Result<Loaded<F>, CliError> {
    if dto.schema != INSTANCE_SCHEMA {
        return Err(CliError::Parse(format!("unsupported instance schema {:?}", dto.schema)));
    }
    if parse_field(&dto.field)? != F::TAG {
        return Err(CliError::Invalid(CoreError::FieldMismatch));
    }
    let a = dto.algebra.decode::<F>()?;
    let b = dto.base_b.decode::<F>()?;
    let c = dto.base_c.decode::<F>()?;
    let images = |v: &[MultiplierDto]| v.iter().map(|m| m.decode()).collect::<Result<Vec<_>, _>>();
    let iota_b = make_base_embedding(&a, &b, images(&dto.iota_b)?, EmbeddingKind::Homomorphism)?;
    let iota_c = make_base_embedding(&a, &c, images(&dto.iota_c)?, EmbeddingKind::Homomorphism)?;
    let mb = MultiplierBialgebroid::new(
        &a,
        iota_b,
        iota_c,
        dto.s_b.decode()?,
        dto.s_c.decode()?,
        dto.tl.decode()?,
        dto.tr.decode()?,
        dto.lt.decode()?,
        dto.rt.decode()?,
    )?;
    let star = match &dto.star {
        Some(s) => Some(StarStructure { star_a: s.star_a.decode()?, star_b: s.star_b.decode()?, star_c: s.star_c.decode()? }),
        None => None,
    };
    Ok(Loaded { mb, star })
}
