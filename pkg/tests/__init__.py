# Testes do sglab
