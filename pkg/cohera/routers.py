from cohera.algebra.controller import combine, extract, support
from cohera.desirability.controller import coherent, member
from cohera.embeddings.controller import at_of, atoms, lift, saturate
from cohera.partitions.controller import cond_independent, independent
from cohera.verify.controller import verify

commands = [
    coherent,
    member,
    combine,
    extract,
    support,
    saturate,
    independent,
    cond_independent,
    lift,
    atoms,
    at_of,
    verify,
]
