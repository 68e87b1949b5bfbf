from .app_config import ServiceSettings, get_service_settings

__all__ = ["ServiceSettings", "get_service_settings"]
