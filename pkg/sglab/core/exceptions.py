"""
Exceções do sglab.

Todas herdam de ValueError para que chamadores genéricos continuem
funcionando; a CLI traduz cada uma para um código de saída.
"""


class SignedGraphError(ValueError):
    """Erro base para entradas inválidas de grafos sinalizados."""


class InvalidInputError(SignedGraphError):
    """Parâmetro fora da faixa, pré-condição violada ou forma inválida."""


class ExactLimitExceeded(SignedGraphError):
    """Ordem acima do limite configurado para uma rotina exata."""

    def __init__(self, operation: str, n: int, limit: int):
        self.operation = operation
        self.n = n
        self.limit = limit
        super().__init__(
            f"{operation}: exact limit exceeded (n={n} > {limit}); no approximation is made"
        )


class SgFormatError(SignedGraphError):
    """Arquivo .sg ou graph6 malformado."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
