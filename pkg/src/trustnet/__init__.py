"""Trust scoring for microblog users.

Ingests user/message corpora, engineers three tiers of per-user features,
computes interaction-based reputation scores, trains a dense neural trust
classifier plus four classic baselines, and evaluates everything under
k-fold cross-validation.
"""

__version__ = "0.1.0"
