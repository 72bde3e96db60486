from manager.managers import HookOfDefaultManager


class NeverImportedHook(HookOfDefaultManager):
    name = "private"
