from ._kacim import (
    EstimateResult,
    ProjectionModel,
    dcor_biased,
    dcor_unbiased,
    delta_n,
    estimate,
    extract_features,
    gaussian_kacim,
    gen_additive,
    gen_classification,
    gen_gaussian_pair,
    gen_independent,
    hsic_gaussian,
    permutation_null,
    train_feature_extractor,
    wilcoxon_signed_rank,
)

__all__ = [
    "EstimateResult",
    "ProjectionModel",
    "dcor_biased",
    "dcor_unbiased",
    "delta_n",
    "estimate",
    "extract_features",
    "gaussian_kacim",
    "gen_additive",
    "gen_classification",
    "gen_gaussian_pair",
    "gen_independent",
    "hsic_gaussian",
    "permutation_null",
    "train_feature_extractor",
    "wilcoxon_signed_rank",
]
