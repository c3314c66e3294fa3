from .settings import settings, get_settings, Profile

__all__ = ["settings", "get_settings", "Profile"]
