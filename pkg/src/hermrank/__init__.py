"""
hermrank 패키지

Hermitian 다항식 A(z, z̄)·‖z‖²_{r,s,t} 의 rank/signature 를 정확 산술로 계산하고,
rank gap 정리들을 무작위 다항식 패밀리 위에서 검증하기 위한 루트 패키지입니다.
"""

__all__ = ["__version__"]

__version__ = "0.1.0"
