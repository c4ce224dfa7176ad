"""
d(ν) 곡선 재적합 결과 정리
"""
from typing import Any, Dict, Optional, Tuple

import numpy as np
import pandas as pd

from config import get_config
from utils.error_handling import DomainError
from utils.logging_config import get_project_logger
from variational.models import CorrectionFit
from variational.shape_exponent import CorrectionRefit, d_fitted, refit_correction_constants

logger = get_project_logger(__name__)

CURVE_COLUMNS = ['nu', 'd_min', 'd_fitted_paper', 'd_fitted_refit']


def fit_grid(grid_min: Optional[float] = None, grid_max: Optional[float] = None,
             grid_points: Optional[int] = None) -> np.ndarray:
    fit_config = get_config('fit')
    grid_min = fit_config['grid_min'] if grid_min is None else grid_min
    grid_max = fit_config['grid_max'] if grid_max is None else grid_max
    grid_points = fit_config['grid_points'] if grid_points is None else grid_points
    if not grid_min < grid_max or grid_points < 2:
        raise DomainError(f"격자가 유효하지 않습니다: [{grid_min}, {grid_max}], {grid_points}점")
    return np.linspace(grid_min, grid_max, int(grid_points))


def curve_frame(refit: CorrectionRefit) -> pd.DataFrame:
    published = CorrectionFit.from_config()
    return pd.DataFrame({
        'nu': refit.nu_grid,
        'd_min': refit.d_min,
        'd_fitted_paper': [d_fitted(nu, published) for nu in refit.nu_grid],
        'd_fitted_refit': refit.d_refit,
    }, columns=CURVE_COLUMNS)


def fit_summary(refit: CorrectionRefit) -> Dict[str, Any]:
    return {
        'fitted': refit.fit.as_dict(),
        'published': CorrectionFit.from_config().as_dict(),
        'max_residual': refit.max_residual,
        'chisqr': refit.chisqr,
        'nfev': refit.nfev,
        'points': len(refit.nu_grid),
        'warnings': list(refit.warnings),
    }


def run_fit(grid_min: Optional[float] = None, grid_max: Optional[float] = None,
            grid_points: Optional[int] = None) -> Tuple[Dict[str, Any], pd.DataFrame]:
    """재적합 요약(JSON 용)과 (ν, d_min, d_fitted) 곡선"""
    refit = refit_correction_constants(fit_grid(grid_min, grid_max, grid_points))
    return fit_summary(refit), curve_frame(refit)
