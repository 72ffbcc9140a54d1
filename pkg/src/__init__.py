"""
QYANGIAN-LAB - Modules d'évaluation de la q-Yangienne de gl_n, critère
d'irréductibilité des produits tensoriels et oracle exact.
"""
