from django import template

register = template.Library()


@register.filter
def coord(value):
    """Fixed 12-digit coordinate; negative zero prints as zero"""
    text = f"{value:.12f}"
    if text.startswith('-') and not text.strip('-0.'):
        return text[1:]
    return text


@register.filter
def get_item(dictionary, key):
    """Get an item from a dictionary"""
    if dictionary is None:
        return None
    return dictionary.get(key)
